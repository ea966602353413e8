"""Hunting for counterexamples to the scalar triangle inequality.

The hunter is a falsifier: it sweeps a rescaled lattice, a large seeded
random sample across six magnitude decades, and a projected coordinate
ascent from the best candidates. A clean run is evidence; the exact
certificate is the proof. Flipping one certificate line the other way
shows what a real violation looks like.
"""

import numpy as np

from gradenorm import (
    CertificateLine,
    GradingSignature,
    SearchConfig,
    hunt,
    line_defect,
)

print("=" * 72)
print("Hunts at lengths 2..5 (200k samples each, seed 42)")
print("=" * 72)
for r in (2, 3, 4, 5):
    out = hunt(SearchConfig(r=r, sample_count=200_000, rng_seed=42))
    state = "VIOLATION" if out.violation_found else "clean"
    print(
        f"  r={r}: {state}, max relative defect {out.max_relative_defect:+.3e} "
        f"over {out.samples_evaluated} evaluations"
    )
    a, b = out.argmax
    print(f"        argmax a = {np.round(a.magnitudes, 5).tolist()}")
    print(f"        argmax b = {np.round(b.magnitudes, 5).tolist()}")

print()
print("=" * 72)
print("What a genuine violation looks like: an inadmissible line")
print("=" * 72)
sig = GradingSignature(5)
bad = CertificateLine(3, 1, 3)  # fails majorization: (21/5, 9/5) vs (5, 1)
for x in (1.0, 10.0, 100.0):
    print(f"  line (3,1->3) defect at (x={x:>5}, y=1): {line_defect(sig, bad, x, 1.0):+.6e}")
print("  growing like x^5 against a shadow that only carries x^(21/5):")
print("  the defect goes positive and explodes, exactly what majorization rules out.")
