"""Exact arithmetic kernel: big-integer binomial coefficients, rational
exponent pairs, and the two-variable majorization predicate.

The certificate checker trusts this module and nothing else, so every
comparison here is exact. Rationals are ``fractions.Fraction`` values,
which are always stored reduced with a positive denominator and compare
by big-integer cross multiplication; no floating point enters the proof
path. ``muirhead_pair_holds`` is the one numeric routine, kept as a
cross-check of what ``majorizes`` certifies.

All functions are pure and all values immutable, so concurrent use
needs no coordination.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "ExponentPair",
    "binom",
    "majorizes",
    "muirhead_pair_holds",
    "rational_from_str",
    "rational_to_str",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k) for 0 <= k <= n.

    Multiplicative formula over Python big integers; the division at
    step i is exact because i! divides any product of i consecutive
    integers.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binom requires nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise ValueError(f"binom requires k <= n, got ({n}, {k})")
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def rational_to_str(x: Rational | int) -> str:
    """Render a rational as ``"p/q"``, or plain ``"p"`` when q = 1.

    This is the wire format for rationals in every JSON payload.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text: str) -> Rational:
    """Parse ``"p/q"`` or ``"p"``. Decimal or float forms are rejected."""
    stripped = text.strip()
    if not _RATIONAL_RE.fullmatch(stripped):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(stripped)


@dataclass(frozen=True)
class ExponentPair:
    """An unordered pair of nonnegative rational exponents.

    Stored sorted with ``hi >= lo``, so two-element majorization is a
    degree comparison plus one leading-exponent comparison.
    """

    hi: Rational
    lo: Rational

    def __post_init__(self) -> None:
        hi, lo = Fraction(self.hi), Fraction(self.lo)
        if hi < lo:
            hi, lo = lo, hi
        if lo < 0:
            raise ValueError(f"exponents must be nonnegative, got ({self.hi}, {self.lo})")
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "lo", lo)

    def degree(self) -> Rational:
        return self.hi + self.lo

    def as_floats(self) -> tuple[float, float]:
        return float(self.hi), float(self.lo)

    def __str__(self) -> str:
        return f"({rational_to_str(self.hi)}, {rational_to_str(self.lo)})"


def majorizes(p: ExponentPair, q: ExponentPair) -> bool:
    """True iff p and q have equal degree and ``p.hi >= q.hi``, exactly.

    This is majorization for two-element nonincreasing sequences. It is
    the hypothesis under which the symmetric sum built from p dominates
    the one built from q pointwise on the nonnegative quadrant (the
    two-variable case of Muirhead's inequality). Unequal degrees simply
    yield False.
    """
    return p.degree() == q.degree() and p.hi >= q.hi


def _symmetric_sum(pair: ExponentPair, x: float, y: float) -> float:
    hi, lo = pair.as_floats()
    return x**hi * y**lo + x**lo * y**hi


def muirhead_pair_holds(
    dominant: ExponentPair,
    dominated: ExponentPair,
    x: float,
    y: float,
    rel_tol: float = 1e-12,
) -> bool:
    """Numerically confirm the two-variable Muirhead comparison at (x, y).

    Requires ``majorizes(dominant, dominated)`` and x, y >= 0; anything
    else is a domain error. Returns whether

        x^hi' y^lo' + x^lo' y^hi'  >=  x^hi y^lo + x^lo y^hi

    holds within ``rel_tol`` relative slack. This is a test oracle only;
    the certificate checker relies on ``majorizes`` alone.
    """
    if not majorizes(dominant, dominated):
        raise ValueError(f"{dominant} does not majorize {dominated}")
    if x < 0 or y < 0:
        raise ValueError(f"arguments must be nonnegative, got ({x}, {y})")
    big = _symmetric_sum(dominant, x, y)
    small = _symmetric_sum(dominated, x, y)
    return big >= small - rel_tol * max(1.0, big, small)
