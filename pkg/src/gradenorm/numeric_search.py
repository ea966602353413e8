"""Floating-point falsification of the scalar triangle inequality, and
numeric spot checks for certificate lines.

The hunter maximizes the defect N(a + b) - N(a) - N(b) over pairs of
nonnegative profiles with three stages: a coarse lattice rescaled into
six decades of magnitude, a large seeded random sweep, and a short
projected coordinate-ascent refinement of the best candidates. Because
the norm is not dilation homogeneous for r >= 3, a violation could in
principle hide at extreme scales, hence the explicit log-uniform
magnitude coverage instead of normalizing samples.

A defect only counts as a violation when it exceeds
tolerance * max(1, N(a) + N(b)); absolute thresholds misfire across
magnitude decades. The hunter is a falsifier, not a verifier: a clean
run is evidence, the certificate checker is the proof.

Everything is deterministic given the configured seed, including the
parallel path: work is split into fixed chunks with per-chunk spawned
seeds and merged by first-best, so thread count never changes results.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any

import numpy as np

from .certificate import CertificateLine
from .exactmath import binom
from .expansion import shadow
from .graded_space import GradingSignature, ScalarProfile, profile_from_json, profile_to_json

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "scalar_defect",
    "hunt",
    "line_defect",
    "check_line_numeric",
]

LOG10_MAGNITUDE_RANGE = (-3.0, 3.0)

_GRID_POINT_CAP = 100_000
_CHUNK_ROWS = 200_000
_ASCENT_CANDIDATES = 8


@dataclass(frozen=True)
class SearchConfig:
    r: int
    sample_count: int = 1_000_000
    grid_resolution: int = 3
    ascent_steps: int = 200
    ascent_step_size: float = 0.25
    rng_seed: int = 0
    tolerance: float = 1e-12

    def __post_init__(self) -> None:
        GradingSignature(self.r)  # validates r
        for name in ("sample_count", "grid_resolution", "ascent_steps"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.ascent_step_size <= 0 or self.tolerance <= 0:
            raise ValueError("ascent_step_size and tolerance must be positive")


@dataclass(frozen=True)
class SearchOutcome:
    max_defect: float
    max_relative_defect: float
    argmax: tuple[ScalarProfile, ScalarProfile]
    samples_evaluated: int
    violation_found: bool

    def to_json(self) -> dict:
        return {
            "r": self.argmax[0].signature.r,
            "max_defect": self.max_defect,
            "max_relative_defect": self.max_relative_defect,
            "argmax_a": profile_to_json(self.argmax[0]),
            "argmax_b": profile_to_json(self.argmax[1]),
            "samples_evaluated": self.samples_evaluated,
            "violation_found": self.violation_found,
        }

    @classmethod
    def from_json(cls, obj: Any) -> "SearchOutcome":
        return cls(
            max_defect=float(obj["max_defect"]),
            max_relative_defect=float(obj["max_relative_defect"]),
            argmax=(profile_from_json(obj["argmax_a"]), profile_from_json(obj["argmax_b"])),
            samples_evaluated=int(obj["samples_evaluated"]),
            violation_found=bool(obj["violation_found"]),
        )


def _batch_norms(exponents: np.ndarray, mags: np.ndarray) -> np.ndarray:
    """Scalar norms of an (N, r) block of profiles."""
    r = exponents.shape[0]
    if r == 1:
        # (a^2)^(1/2) is the magnitude itself; keep it bit-exact
        return mags[:, 0].copy()
    total = np.power(mags, exponents[None, :]).sum(axis=1)
    return np.power(total, 1.0 / (2 * r))


def _batch_defects(exponents: np.ndarray, a: np.ndarray, b: np.ndarray):
    na = _batch_norms(exponents, a)
    nb = _batch_norms(exponents, b)
    nsum = _batch_norms(exponents, a + b)
    defect = nsum - na - nb
    rel = defect / np.maximum(1.0, na + nb)
    return defect, rel


def scalar_defect(a: ScalarProfile, b: ScalarProfile) -> float:
    """N(a + b) - N(a) - N(b) with the componentwise profile sum."""
    if a.signature != b.signature:
        raise ValueError("profiles live over different gradings")
    exps = np.asarray(a.signature.exponents, dtype=float)
    defect, _ = _batch_defects(
        exps, a.magnitudes[None, :], b.magnitudes[None, :]
    )
    return float(defect[0])


@dataclass
class _Best:
    rel: float = -np.inf
    raw: float = -np.inf
    a: np.ndarray | None = None
    b: np.ndarray | None = None

    def offer(self, rel: float, raw: float, a: np.ndarray, b: np.ndarray) -> None:
        if rel > self.rel:
            self.rel, self.raw = float(rel), float(raw)
            self.a, self.b = np.array(a, copy=True), np.array(b, copy=True)


def _scan_block(exponents, a, b, best: _Best) -> None:
    defect, rel = _batch_defects(exponents, a, b)
    idx = int(np.argmax(rel))
    best.offer(rel[idx], defect[idx], a[idx], b[idx])


def _grid_points(r: int, resolution: int, rng: np.random.Generator) -> np.ndarray:
    """Lattice over [0, 1]^{2r}; full product when small enough, else a
    seeded subsample of lattice points."""
    width = 2 * r
    if resolution**width <= _GRID_POINT_CAP:
        axes = np.linspace(0.0, 1.0, resolution)
        pts = np.array(list(itertools.product(axes, repeat=width)))
    else:
        levels = rng.integers(0, resolution, size=(_GRID_POINT_CAP, width))
        pts = levels / (resolution - 1)
    return pts


def _log_uniform(rng: np.random.Generator, shape) -> np.ndarray:
    lo, hi = LOG10_MAGNITUDE_RANGE
    return 10.0 ** rng.uniform(lo, hi, size=shape)


def _ascend(exponents, a, b, steps: int, step_size: float):
    """Derivative-free coordinate ascent on the relative defect,
    projected onto the nonnegative orthant."""
    x = np.concatenate([a, b])
    r = a.shape[0]

    def rel_at(v: np.ndarray) -> float:
        _, rel = _batch_defects(exponents, v[None, :r], v[None, r:])
        return float(rel[0])

    current = rel_at(x)
    evals = 1
    h = step_size
    for _ in range(steps):
        improved = False
        for j in range(2 * r):
            for sign in (1.0, -1.0):
                cand = x.copy()
                cand[j] = max(0.0, cand[j] + sign * h * max(abs(cand[j]), 1e-3))
                if cand[j] == x[j]:
                    continue
                value = rel_at(cand)
                evals += 1
                if value > current:
                    current, x = value, cand
                    improved = True
                    break
        if not improved:
            h *= 0.5
            if h < 1e-10:
                break
    return x[:r], x[r:], current, evals


def hunt(config: SearchConfig, threads: int = 1) -> SearchOutcome:
    """Maximize the scalar defect; deterministic for a fixed config.

    Stages: rescaled lattice, seeded random sweep (chunked, optionally
    across ``threads`` workers), then coordinate ascent from the best
    candidates. Ascent never leaves the nonnegative orthant.
    """
    sig = GradingSignature(config.r)
    exps = np.asarray(sig.exponents, dtype=float)
    root = np.random.SeedSequence(config.rng_seed)
    grid_ss, sweep_ss = root.spawn(2)

    evaluated = 0
    candidates: list[_Best] = []

    # stage 1: lattice rescaled by log-uniform magnitudes
    grid_rng = np.random.default_rng(grid_ss)
    pts = _grid_points(config.r, config.grid_resolution, grid_rng)
    pts = pts * _log_uniform(grid_rng, pts.shape)
    grid_best = _Best()
    _scan_block(exps, pts[:, : config.r], pts[:, config.r :], grid_best)
    evaluated += pts.shape[0]
    candidates.append(grid_best)

    # stage 2: random sweep in fixed chunks so thread count is irrelevant
    n_chunks = (config.sample_count + _CHUNK_ROWS - 1) // _CHUNK_ROWS
    chunk_seeds = sweep_ss.spawn(n_chunks)

    def run_chunk(index: int) -> _Best:
        rng = np.random.default_rng(chunk_seeds[index])
        rows = min(_CHUNK_ROWS, config.sample_count - index * _CHUNK_ROWS)
        a = _log_uniform(rng, (rows, config.r))
        b = _log_uniform(rng, (rows, config.r))
        best = _Best()
        _scan_block(exps, a, b, best)
        return best

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunk_bests = list(pool.map(run_chunk, range(n_chunks)))
    else:
        chunk_bests = [run_chunk(i) for i in range(n_chunks)]
    evaluated += config.sample_count
    candidates.extend(chunk_bests)

    # stage 3: refine the top candidates
    ranked = sorted(
        (c for c in candidates if c.a is not None),
        key=lambda c: -c.rel,
    )[:_ASCENT_CANDIDATES]
    overall = _Best()
    for c in ranked:
        overall.offer(c.rel, c.raw, c.a, c.b)
    for c in ranked:
        a, b, rel, evals = _ascend(
            exps, c.a, c.b, config.ascent_steps, config.ascent_step_size
        )
        evaluated += evals
        defect, _ = _batch_defects(exps, a[None, :], b[None, :])
        overall.offer(rel, float(defect[0]), a, b)

    assert overall.a is not None
    argmax = (ScalarProfile(sig, overall.a), ScalarProfile(sig, overall.b))
    return SearchOutcome(
        max_defect=overall.raw,
        max_relative_defect=overall.rel,
        argmax=argmax,
        samples_evaluated=evaluated,
        violation_found=bool(overall.rel > config.tolerance),
    )


# ---------------------------------------------------------------------------
# Per-line numeric checks
# ---------------------------------------------------------------------------

def line_defect(sig: GradingSignature, line: CertificateLine, x: float, y: float) -> float:
    """c_L (x^{e-s} y^s + x^s y^{e-s}) - c_R (x^a y^b + x^b y^a) at one point.

    Nonpositive for admissible lines and nonnegative x, y.
    """
    e = sig.exponent(line.level)
    s = line.split
    c_left = binom(e, s)
    c_right = binom(2 * sig.r, line.target)
    alpha, beta = shadow(sig, line.target, line.level).exponents.as_floats()
    lhs = c_left * (x ** (e - s) * y**s + x**s * y ** (e - s))
    rhs = c_right * (x**alpha * y**beta + x**beta * y**alpha)
    return lhs - rhs


def check_line_numeric(
    sig: GradingSignature, line: CertificateLine, config: SearchConfig
) -> float:
    """Largest relative excess of a line over sampled nonnegative (x, y).

    Samples ``config.sample_count`` log-uniform points in [1e-6, 1e2]
    plus boundary and diagonal cases, and returns
    max (lhs - rhs) / max(1, rhs); a line accepted by ``check_line``
    stays below ``config.tolerance``. Seeded per line, deterministic.
    """
    e = sig.exponent(line.level)
    s = line.split
    c_left = float(binom(e, s))
    c_right = float(binom(2 * sig.r, line.target))
    alpha, beta = shadow(sig, line.target, line.level).exponents.as_floats()

    seed = np.random.SeedSequence(
        [config.rng_seed, line.level, line.split, line.target]
    )
    rng = np.random.default_rng(seed)
    x = 10.0 ** rng.uniform(-6.0, 2.0, size=config.sample_count)
    y = 10.0 ** rng.uniform(-6.0, 2.0, size=config.sample_count)
    extra_x = np.array([0.0, 1.0, 0.0, 1.0, 2.0, 7.5, 100.0, 100.0])
    extra_y = np.array([0.0, 0.0, 1.0, 1.0, 2.0, 7.5, 100.0, 1e-6])
    x = np.concatenate([x, extra_x])
    y = np.concatenate([y, extra_y])

    lhs = c_left * (x ** float(e - s) * y**float(s) + x**float(s) * y ** float(e - s))
    rhs = c_right * (x**alpha * y**beta + x**beta * y**alpha)
    rel = (lhs - rhs) / np.maximum(1.0, rhs)
    return float(rel.max())
