"""Command-line front door.

Subcommands: norm, dilate, triangle-sample, prove, check, hunt, report.
Exit codes are stable: 0 success / valid / no violation, 1 invalid
certificate, infeasible schema, or violation found, 2 usage or parse
errors. With --json stdout is a single JSON document; progress and
diagnostics go to stderr. GRADENORM_THREADS caps worker threads for the
hunt sweep.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

import numpy as np

from . import __version__
from .certificate import (
    Certificate,
    InfeasibilityReport,
    certificate_from_json,
    certificate_to_json,
    certificate_to_report,
    check_certificate,
    search_certificate,
)
from .expansion import orbit_table, rhs_table, shadow_table
from .graded_space import (
    GradingSignature,
    dilate,
    hnorm,
    random_vector,
    triangle_defect,
    vector_from_json,
    vector_to_json,
)
from .numeric_search import SearchConfig, hunt

__all__ = ["main", "entrypoint"]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _threads() -> int:
    raw = os.environ.get("GRADENORM_THREADS", "")
    try:
        value = int(raw) if raw else 1
    except ValueError:
        print(f"ignoring malformed GRADENORM_THREADS={raw!r}", file=sys.stderr)
        return 1
    return max(1, min(value, 64))


def _load_json(path: str | None) -> Any:
    if path is None:
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(obj: Any) -> None:
    print(json.dumps(obj))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradenorm",
        description="homogeneous-norm candidates on graded vector spaces: "
        "norms, proof certificates, counterexample hunts",
    )
    parser.add_argument("--version", action="version", version=f"gradenorm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="norm of a graded vector (JSON in)")
    p.add_argument("--in", dest="infile", help="vector JSON file (default stdin)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dilate", help="apply the dilation of parameter t (JSON in/out)")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--in", dest="infile", help="vector JSON file (default stdin)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("triangle-sample", help="triangle defect of a supplied or sampled pair")
    p.add_argument("--in", dest="infile", help='JSON file {"X": vector, "Y": vector}')
    p.add_argument("--r", type=_positive_int, help="sample a random pair of this length")
    p.add_argument("--dims", help="comma-separated level dimensions (default 3 each)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("prove", help="search a certificate for length r")
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--out", help="write the certificate JSON here")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="validate a certificate JSON file")
    p.add_argument("file")

    p = sub.add_parser("hunt", help="numeric counterexample hunt for length r")
    p.add_argument("--r", type=_positive_int, required=True)
    p.add_argument("--samples", type=_positive_int, default=SearchConfig.sample_count)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("report", help="render a certificate as grouped comparisons")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_norm(args: argparse.Namespace) -> int:
    try:
        vec = vector_from_json(_load_json(args.infile))
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(str(exc))
    value = hnorm(vec)
    if args.json:
        _emit({"r": vec.signature.r, "hnorm": value})
    else:
        print(value)
    return 0


def _cmd_dilate(args: argparse.Namespace) -> int:
    try:
        vec = vector_from_json(_load_json(args.infile))
        scaled = dilate(args.t, vec)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(str(exc))
    _emit(vector_to_json(scaled))
    return 0


def _cmd_triangle_sample(args: argparse.Namespace) -> int:
    try:
        if args.infile is not None:
            payload = _load_json(args.infile)
            if not isinstance(payload, dict) or "X" not in payload or "Y" not in payload:
                raise ValueError("expected JSON with keys 'X' and 'Y'")
            x = vector_from_json(payload["X"])
            y = vector_from_json(payload["Y"])
        elif args.r is not None:
            sig = GradingSignature(args.r)
            dims = None
            if args.dims:
                dims = tuple(int(d) for d in args.dims.split(","))
            rng = np.random.default_rng(args.seed)
            x = random_vector(sig, rng, dims=dims)
            y = random_vector(sig, rng, dims=dims)
        else:
            raise ValueError("provide --in or --r")
        defect = triangle_defect(x, y)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(str(exc))
    result = {
        "X": vector_to_json(x),
        "Y": vector_to_json(y),
        "hnorm_x": hnorm(x),
        "hnorm_y": hnorm(y),
        "hnorm_sum": hnorm(x + y),
        "triangle_defect": defect,
    }
    if args.json:
        _emit(result)
    else:
        print(f"hnorm(X) = {result['hnorm_x']}")
        print(f"hnorm(Y) = {result['hnorm_y']}")
        print(f"hnorm(X+Y) = {result['hnorm_sum']}")
        print(f"triangle defect = {defect}")
    return 0


def _cmd_prove(args: argparse.Namespace) -> int:
    sig = GradingSignature(args.r)
    outcome = search_certificate(sig)
    if isinstance(outcome, InfeasibilityReport):
        _emit(outcome.to_json())
        print(
            f"no certificate: level {outcome.level} orbits {list(outcome.deficient_splits)} "
            f"share only targets {list(outcome.joint_targets)}",
            file=sys.stderr,
        )
        return 1
    cert: Certificate = outcome
    report = certificate_to_report(sig, cert)  # re-checks before rendering
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(certificate_to_json(cert), fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            return _fail_usage(str(exc))
    if args.json:
        _emit({"certificate": certificate_to_json(cert), "report": report.to_json()})
    else:
        print(report.render_text())
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        cert = certificate_from_json(_load_json(args.file))
        sig = GradingSignature(cert.r)
        report = check_certificate(sig, cert)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(str(exc))
    _emit(report.to_json())
    return 0 if report.valid else 1


def _cmd_hunt(args: argparse.Namespace) -> int:
    config = SearchConfig(r=args.r, sample_count=args.samples, rng_seed=args.seed)
    outcome = hunt(config, threads=_threads())
    if args.json:
        _emit(outcome.to_json())
    else:
        state = "VIOLATION" if outcome.violation_found else "no violation"
        print(
            f"{state}: max relative defect {outcome.max_relative_defect:.3e} "
            f"over {outcome.samples_evaluated} evaluations (r={args.r}, seed={args.seed})"
        )
        if outcome.violation_found:
            print(f"argmax a = {outcome.argmax[0].magnitudes.tolist()}")
            print(f"argmax b = {outcome.argmax[1].magnitudes.tolist()}")
    return 1 if outcome.violation_found else 0


def _cmd_report(args: argparse.Namespace) -> int:
    try:
        cert = certificate_from_json(_load_json(args.file))
        sig = GradingSignature(cert.r)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        return _fail_usage(str(exc))
    try:
        report = certificate_to_report(sig, cert)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        _emit(
            {
                "report": report.to_json(),
                "lhs_orbits": orbit_table(sig),
                "rhs_orbits": rhs_table(sig),
                "shadows": shadow_table(sig),
            }
        )
    else:
        print(report.render_text())
    return 0


_HANDLERS = {
    "norm": _cmd_norm,
    "dilate": _cmd_dilate,
    "triangle-sample": _cmd_triangle_sample,
    "prove": _cmd_prove,
    "check": _cmd_check,
    "hunt": _cmd_hunt,
    "report": _cmd_report,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return _HANDLERS[args.command](args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
