"""Where dilation homogeneity lives and where it dies.

N(dilate(t, X)) = |t| N(X) holds for r <= 2 and fails for every r >= 3.
The failure witness is as small as it gets: a vector supported on level
2 alone, dilated by t = 2.
"""

import numpy as np

from gradenorm import GradedVector, GradingSignature, hnorm, homogeneity_defect, random_vector

rng = np.random.default_rng(2)

print("=" * 72)
print("r <= 2: homogeneity holds (defects at rounding level)")
print("=" * 72)
for r in (1, 2):
    sig = GradingSignature(r)
    worst = 0.0
    for _ in range(50_000):
        x = random_vector(sig, rng, magnitude_decades=(-2, 2))
        t = float(rng.uniform(0.05, 20.0) * rng.choice([-1.0, 1.0]))
        rel = abs(homogeneity_defect(x, t)) / max(1.0, abs(t) * hnorm(x))
        worst = max(worst, rel)
    print(f"  r={r}: worst relative defect over 50k random (X, t) = {worst:.3e}")

print()
print("=" * 72)
print("r >= 3: a level-2 unit vector breaks homogeneity at t = 2")
print("=" * 72)
for r in (3, 4, 5, 6):
    comps = [np.zeros(1) for _ in range(r)]
    comps[1] = np.array([1.0])
    witness = GradedVector.from_components(comps)
    defect = homogeneity_defect(witness, 2.0)
    e2 = GradingSignature(r).exponent(2)
    closed_form = 2.0 ** (2 * e2 / (2 * r)) - 2.0
    print(
        f"  r={r}: defect = {defect:.12f}"
        f"   (closed form 2^(2 e_2 / 2r) - 2 = {closed_form:.12f})"
    )
print()
print("For r=3 the defect is 2^(4/3) - 2 = 0.519842099790..., strictly positive,")
print("so the norm is only a homogeneous norm candidate there, not the real thing.")
