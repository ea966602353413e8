"""Graded real vector spaces, the candidate homogeneous norm, the
dilation family, and the reduction to per-level scalar profiles.

A graded vector X = (v_1, ..., v_r) carries one Euclidean component per
level; level dimensions are free per space. The candidate norm attaches
the even exponent e_i = 2(r - i + 1) to level i and takes the 2r-th root
of the sum:

    N(X) = (|v_1|^{2r} + |v_2|^{2r-2} + ... + |v_r|^2)^{1/2r}

The dilation of parameter t scales level i by t^i. N is nonnegative and
vanishes only at zero, and N(-X) = N(X) because every exponent is even.
It commutes with dilations, N(dilate(t, X)) = |t| N(X), exactly when
r <= 2; ``homogeneity_defect`` measures the failure for longer gradings
(witness: a vector supported on level 2 alone).

Because each component enters N only through its Euclidean norm, and N
is monotone in each of those norms, the triangle inequality for N
reduces to the same inequality for scalar profiles, the vectors of
per-level norms. The certificate module proves that scalar statement
with exact arithmetic; this module is double-precision throughout and
never enters the proof-checking path. Sensible magnitude ranges are
assumed (|v_i| around 1e-3..1e3 for r up to a few dozen); far outside
that, a_i^{2r} can leave the double range.

All operations are pure functions over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

__all__ = [
    "GradingSignature",
    "GradedVector",
    "ScalarProfile",
    "hnorm",
    "dilate",
    "homogeneity_defect",
    "scalar_profile",
    "scalar_norm",
    "triangle_defect",
    "random_vector",
    "vector_to_json",
    "vector_from_json",
    "profile_to_json",
    "profile_from_json",
]


@dataclass(frozen=True)
class GradingSignature:
    """Grading length r together with the exponent ladder (2r, ..., 4, 2)."""

    r: int
    exponents: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or isinstance(self.r, bool) or self.r < 1:
            raise ValueError(f"grading length must be a positive integer, got {self.r!r}")
        object.__setattr__(self, "exponents", tuple(2 * (self.r - i) for i in range(self.r)))

    def exponent(self, level: int) -> int:
        """e_i = 2(r - i + 1) for a 1-based level index."""
        if not 1 <= level <= self.r:
            raise ValueError(f"level {level} out of range for r={self.r}")
        return self.exponents[level - 1]


def _freeze_component(raw: Any) -> np.ndarray:
    arr = np.array(raw, dtype=float, copy=True).reshape(-1)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GradedVector:
    """One real Euclidean component per level."""

    signature: GradingSignature
    components: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        comps = tuple(_freeze_component(c) for c in self.components)
        if len(comps) != self.signature.r:
            raise ValueError(
                f"expected {self.signature.r} components, got {len(comps)}"
            )
        for level, c in enumerate(comps, start=1):
            if c.size < 1:
                raise ValueError(f"level {level} must have dimension >= 1")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_components(cls, components: Sequence[Any]) -> "GradedVector":
        """Build a vector inferring r from the component count."""
        return cls(GradingSignature(len(components)), tuple(components))

    @classmethod
    def zero(cls, signature: GradingSignature, dims: Sequence[int] | None = None) -> "GradedVector":
        dims = tuple(dims) if dims is not None else (3,) * signature.r
        return cls(signature, tuple(np.zeros(d) for d in dims))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.components)

    def __add__(self, other: "GradedVector") -> "GradedVector":
        _require_same_space(self, other)
        return GradedVector(
            self.signature,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def __neg__(self) -> "GradedVector":
        return GradedVector(self.signature, tuple(-c for c in self.components))


@dataclass(frozen=True, eq=False)
class ScalarProfile:
    """Per-level nonnegative magnitudes, the shadow of a graded vector."""

    signature: GradingSignature
    magnitudes: np.ndarray

    def __post_init__(self) -> None:
        mags = np.array(self.magnitudes, dtype=float, copy=True).reshape(-1)
        if mags.size != self.signature.r:
            raise ValueError(f"expected {self.signature.r} magnitudes, got {mags.size}")
        if np.any(mags < 0) or not np.all(np.isfinite(mags)):
            raise ValueError("profile magnitudes must be finite and nonnegative")
        mags.setflags(write=False)
        object.__setattr__(self, "magnitudes", mags)

    def __add__(self, other: "ScalarProfile") -> "ScalarProfile":
        if self.signature != other.signature:
            raise ValueError("profiles live over different gradings")
        return ScalarProfile(self.signature, self.magnitudes + other.magnitudes)


def _require_same_space(x: GradedVector, y: GradedVector) -> None:
    if x.signature != y.signature or x.dims != y.dims:
        raise ValueError("vectors live in different graded spaces")


def scalar_norm(a: ScalarProfile) -> float:
    """(sum_i a_i^{e_i})^{1/2r} for a nonnegative profile.

    For r = 1 this is (a_1^2)^{1/2} = a_1, returned as such so the
    one-level norm stays bit-exact Euclidean.
    """
    mags = a.magnitudes
    if np.any(mags < 0):
        raise ValueError("profile magnitudes must be nonnegative")
    if a.signature.r == 1:
        return float(mags[0])
    exps = np.asarray(a.signature.exponents, dtype=float)
    total = float(np.sum(mags**exps))
    return total ** (1.0 / (2 * a.signature.r))


def scalar_profile(x: GradedVector) -> ScalarProfile:
    """Per-level Euclidean norms of a graded vector."""
    mags = np.array([np.linalg.norm(c) for c in x.components])
    return ScalarProfile(x.signature, mags)


def hnorm(x: GradedVector) -> float:
    """The candidate homogeneous norm; equals scalar_norm(scalar_profile(x))."""
    return scalar_norm(scalar_profile(x))


def dilate(t: float, x: GradedVector) -> GradedVector:
    """Scale level i by t^i. The parameter must be nonzero."""
    if t == 0:
        raise ValueError("dilation parameter must be nonzero")
    return GradedVector(
        x.signature,
        tuple(c * t ** (i + 1) for i, c in enumerate(x.components)),
    )


def homogeneity_defect(x: GradedVector, t: float) -> float:
    """hnorm(dilate(t, x)) - |t| hnorm(x).

    Zero (to rounding) for r <= 2 and any x, t; strictly positive
    witnesses exist for every r >= 3.
    """
    return hnorm(dilate(t, x)) - abs(t) * hnorm(x)


def triangle_defect(x: GradedVector, y: GradedVector) -> float:
    """hnorm(x + y) - hnorm(x) - hnorm(y); nonpositive at least for r <= 5."""
    _require_same_space(x, y)
    return hnorm(x + y) - hnorm(x) - hnorm(y)


def random_vector(
    signature: GradingSignature,
    rng: np.random.Generator,
    dims: Sequence[int] | None = None,
    magnitude_decades: tuple[float, float] | None = None,
) -> GradedVector:
    """Standard-normal components, optionally rescaled per level by a
    log-uniform magnitude 10^u with u drawn from ``magnitude_decades``."""
    dims = tuple(dims) if dims is not None else (3,) * signature.r
    comps = []
    for d in dims:
        c = rng.standard_normal(d)
        if magnitude_decades is not None:
            lo, hi = magnitude_decades
            c = c * 10.0 ** rng.uniform(lo, hi)
        comps.append(c)
    return GradedVector(signature, tuple(comps))


# ---------------------------------------------------------------------------
# JSON wire formats
# ---------------------------------------------------------------------------

def vector_to_json(x: GradedVector) -> dict:
    """``{"r": int, "components": [[float, ...], ...]}``"""
    return {"r": x.signature.r, "components": [c.tolist() for c in x.components]}


def vector_from_json(obj: Any) -> GradedVector:
    if not isinstance(obj, dict) or "r" not in obj or "components" not in obj:
        raise ValueError("graded vector JSON needs keys 'r' and 'components'")
    r, components = obj["r"], obj["components"]
    if not isinstance(r, int) or isinstance(r, bool):
        raise ValueError(f"'r' must be an integer, got {r!r}")
    if not isinstance(components, list) or len(components) != r:
        raise ValueError(f"'components' must be a list of {r} level vectors")
    return GradedVector(GradingSignature(r), tuple(components))


def profile_to_json(a: ScalarProfile) -> dict:
    """``{"r": int, "a": [float, ...]}``"""
    return {"r": a.signature.r, "a": a.magnitudes.tolist()}


def profile_from_json(obj: Any) -> ScalarProfile:
    if not isinstance(obj, dict) or "r" not in obj or "a" not in obj:
        raise ValueError("scalar profile JSON needs keys 'r' and 'a'")
    r, mags = obj["r"], obj["a"]
    if not isinstance(r, int) or isinstance(r, bool):
        raise ValueError(f"'r' must be an integer, got {r!r}")
    if not isinstance(mags, list) or len(mags) != r:
        raise ValueError(f"'a' must be a list of {r} magnitudes")
    return ScalarProfile(GradingSignature(r), np.asarray(mags, dtype=float))
