"""Command-line front-end.

Subcommands:

  classify  EXPR [--space NAME|all] [--dim D]      triviality per space
  periodic  EXPR --lattice "r1;r2;..."             spatially periodic test
  content   EXPR [--dim D]                         T-coefficient generators
  witness   EXPR (--freq "a,b,..." | --auto)       build + verify a witness

Exit codes: 0 decisive, 1 input/usage error, 2 at least one UNKNOWN verdict.
JSON reports are byte-identical across runs for the same input and config
when --no-timing is given.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .classifier import (
    UNKNOWN,
    LatticeSpec,
    SolutionSpace,
    Verdict,
    classify,
    periodic_test,
)
from .config import SolverConfig
from .multipoly import MultiPoly
from .parser import ParseError, default_names, parse, print_canonical
from .symbols import x_content
from .variety import EmptinessVerdict
from .witness import CertificateFailure, Witness, build_witness, verify_residual

_ALL_SPACES = [s for s in SolutionSpace if s is not SolutionSpace.PERIODIC]

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNKNOWN = 2


def _frac(value: str) -> Fraction:
    return Fraction(value.strip())


def _frac_str(q: Fraction) -> str:
    return str(q)


def _spatial_names(d: int) -> list[str]:
    return [f"X{k + 1}" for k in range(d)]


def _serialize_emptiness(v: EmptinessVerdict) -> dict:
    return {
        "status": v.status,
        "witness": None if v.witness is None else [_frac_str(x) for x in v.witness],
        "certificate": v.certificate,
        "diagnostics": v.diagnostics,
    }


def _serialize_evidence(evidence: dict) -> dict:
    out = {}
    for key in sorted(evidence):
        value = evidence[key]
        if isinstance(value, EmptinessVerdict):
            out[key] = _serialize_emptiness(value)
        else:
            out[key] = value
    return out


def _default_grid(d: int) -> list[tuple[tuple[float, ...], float]]:
    xs = [(0.0,) * d, (1.0,) * d, (-1.0,) * d]
    ts = [0.5, 1.0, 2.0]
    return [(x, t) for x in xs for t in ts]


def _serialize_witness(w: Witness, p: MultiPoly) -> dict:
    report = verify_residual(w, p, _default_grid(len(w.frequency)))
    return {
        "kind": w.kind,
        "frequency": [_frac_str(f) for f in w.frequency],
        "frequency_scale": "2*pi" if w.pi_factor else "1",
        "certificate": [str(v) for v in w.certificate],
        "theta_max_order": len(w.theta) - 1,
        "exact_certificate_ok": report.exact_certificate_ok,
        "sampled_residual_max": report.max_numeric_residual,
        "past_ok": report.past_ok,
    }


def _serialize_verdict(space_name: str, v: Verdict, p: MultiPoly) -> dict:
    out = {
        "space": space_name,
        "status": v.status,
        "rule": v.rule,
        "evidence": _serialize_evidence(v.evidence),
    }
    if v.witness is not None:
        out["witness"] = _serialize_witness(v.witness, p)
    return out


def _emit(report: dict, args) -> None:
    if args.output == "json":
        print(json.dumps(report, indent=2))
        return
    # text rendering
    inp = report.get("input", {})
    print(f"symbol: {inp.get('expression')}   (d = {inp.get('dimension')})")
    for v in report.get("verdicts", []):
        print(f"  {v['space']:<16} {v['status']:<11} [{v['rule']}]")
        w = v.get("witness")
        if w:
            scale = "" if w["frequency_scale"] == "1" else "2*pi * "
            print(f"    witness {w['kind']}: frequency {scale}({', '.join(w['frequency'])}), "
                  f"residual max {w['sampled_residual_max']:.3e}")
    for line in report.get("lines", []):
        print(line)


def _config_from_args(args) -> SolverConfig:
    return SolverConfig(
        max_depth=args.max_depth,
        default_box_halfwidth=Fraction(args.box_halfwidth),
        denominator_bound=args.denominator_bound,
        lattice_radius=args.lattice_radius,
        groebner_cap=args.groebner_cap,
        threads=args.threads,
    )


def _read_expression(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    return arg


def _print_parse_error(text: str, err: ParseError) -> None:
    sys.stderr.write(f"error: {err.kind.value}: {err.message}\n")
    sys.stderr.write(f"  {text}\n")
    sys.stderr.write("  " + " " * err.position + "^\n")


def _base_report(expr: str, p: MultiPoly, d: int, names: list[str]) -> dict:
    return {
        "input": {"expression": print_canonical(p, names), "dimension": d},
        "verdicts": [],
        "diagnostics": {},
        "version": __version__,
    }


def cmd_classify(args) -> int:
    text = _read_expression(args.expression)
    config = _config_from_args(args)
    start = time.perf_counter()
    try:
        p, d = parse(text, dim=args.dim)
    except ParseError as err:
        _print_parse_error(text, err)
        return EXIT_INPUT_ERROR
    if args.space == "all":
        spaces = _ALL_SPACES
    else:
        try:
            spaces = [SolutionSpace(args.space)]
        except ValueError:
            sys.stderr.write(f"error: unknown space {args.space!r}\n")
            return EXIT_INPUT_ERROR
        if spaces[0] is SolutionSpace.PERIODIC:
            sys.stderr.write("error: use the 'periodic' subcommand for periodic spaces\n")
            return EXIT_INPUT_ERROR
    report = _base_report(text, p, d, default_names(p.nvars))
    any_unknown = False
    for space in spaces:
        verdict = classify(p, space, config)
        any_unknown = any_unknown or verdict.status == UNKNOWN
        report["verdicts"].append(_serialize_verdict(space.value, verdict, p))
    if not args.no_timing:
        report["timing_seconds"] = time.perf_counter() - start
    _emit(report, args)
    return EXIT_UNKNOWN if any_unknown else EXIT_OK


def _parse_lattice(text: str) -> LatticeSpec:
    rows = []
    for row in text.split(";"):
        entries = [e for chunk in row.split(",") for e in chunk.split()]
        rows.append([_frac(e) for e in entries if e])
    return LatticeSpec.from_rows(rows)


def cmd_periodic(args) -> int:
    text = _read_expression(args.expression)
    config = _config_from_args(args)
    start = time.perf_counter()
    try:
        lattice = _parse_lattice(args.lattice)
    except (ValueError, ZeroDivisionError) as err:
        sys.stderr.write(f"error: invalid lattice: {err}\n")
        return EXIT_INPUT_ERROR
    try:
        p, d = parse(text, dim=lattice.dimension, allow_pi=True)
    except ParseError as err:
        _print_parse_error(text, err)
        return EXIT_INPUT_ERROR
    names = default_names(p.nvars, pi_slot=d)
    verdict = periodic_test(p, lattice, config)
    report = _base_report(text, p, d, names)
    report["input"]["lattice"] = [[_frac_str(x) for x in row] for row in lattice.rows]
    report["verdicts"].append(_serialize_verdict("periodic", verdict, p))
    if not args.no_timing:
        report["timing_seconds"] = time.perf_counter() - start
    _emit(report, args)
    return EXIT_UNKNOWN if verdict.status == UNKNOWN else EXIT_OK


def cmd_content(args) -> int:
    text = _read_expression(args.expression)
    try:
        p, d = parse(text, dim=args.dim)
    except ParseError as err:
        _print_parse_error(text, err)
        return EXIT_INPUT_ERROR
    content = x_content(p)
    names = _spatial_names(d)
    gens = [print_canonical(a, names) for a in content.generators]
    report = _base_report(text, p, d, default_names(p.nvars))
    report["content"] = {"dimension": d, "generators": gens}
    report["lines"] = [f"  generator a_{k}: {g}" for k, g in enumerate(gens)] or ["  zero ideal"]
    _emit(report, args)
    return EXIT_OK


def cmd_witness(args) -> int:
    text = _read_expression(args.expression)
    config = _config_from_args(args)
    try:
        p, d = parse(text, dim=args.dim)
    except ParseError as err:
        _print_parse_error(text, err)
        return EXIT_INPUT_ERROR
    if args.auto:
        verdict = classify(p, SolutionSpace.SPATIALLY_TEMPERED, config)
        if verdict.witness is None:
            sys.stderr.write(f"error: no witness available: verdict is {verdict.status} "
                             f"[{verdict.rule}]\n")
            return EXIT_INPUT_ERROR
        witness = verdict.witness
    else:
        if args.freq is None:
            sys.stderr.write("error: supply --freq or --auto\n")
            return EXIT_INPUT_ERROR
        try:
            freq = [_frac(x) for x in args.freq.split(",")]
        except ValueError:
            sys.stderr.write("error: --freq must be comma-separated rationals\n")
            return EXIT_INPUT_ERROR
        if len(freq) != d:
            sys.stderr.write(f"error: frequency needs {d} coordinates\n")
            return EXIT_INPUT_ERROR
        try:
            witness = build_witness(p, freq)
        except CertificateFailure as err:
            sys.stderr.write(f"error: {err}\n")
            return EXIT_INPUT_ERROR
    report = _base_report(text, p, d, default_names(p.nvars))
    report["witness"] = _serialize_witness(witness, p)
    report["lines"] = [
        f"  certificate OK, residual max {report['witness']['sampled_residual_max']:.3e}"]
    _emit(report, args)
    return EXIT_OK


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullsol",
        description="Decide whether a linear constant-coefficient PDE admits "
                    "nonzero solutions with zero past, per solution space.",
        epilog='Expression grammar: expr := term ((+|-) term)*; '
               'term := factor (* factor)*; factor := base (^ uint)?; '
               'base := T | Xk | i | uint(/uint)? | (expr) | - factor. '
               'Use "-" to read the expression from stdin.')
    parser.add_argument("--version", action="version", version=f"nullsol {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("expression", help='polynomial symbol, or "-" for stdin')
        sp.add_argument("--output", choices=("text", "json"), default="text")
        sp.add_argument("--no-timing", action="store_true",
                        help="omit timing fields (byte-determinism for tests)")
        sp.add_argument("--max-depth", type=int, default=24)
        sp.add_argument("--box-halfwidth", default="16",
                        help="half-width of the fallback search box (rational)")
        sp.add_argument("--denominator-bound", type=int, default=64)
        sp.add_argument("--lattice-radius", type=int, default=16)
        sp.add_argument("--groebner-cap", type=int, default=50000)
        sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("classify", help="classify across solution spaces")
    add_common(sp)
    sp.add_argument("--space", default="all",
                    help="one of: " + ", ".join(s.value for s in _ALL_SPACES) + ", all")
    sp.add_argument("--dim", type=int, default=None,
                    help="spatial dimension d (default: inferred from Xk indices)")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("periodic", help="spatially periodic triviality test")
    add_common(sp)
    sp.add_argument("--lattice", required=True,
                    help='d x d rational period matrix, rows ";"-separated, e.g. "1,0;0,1"')
    sp.set_defaults(func=cmd_periodic)

    sp = sub.add_parser("content", help="print the T-coefficient generators")
    add_common(sp)
    sp.add_argument("--dim", type=int, default=None)
    sp.set_defaults(func=cmd_content)

    sp = sub.add_parser("witness", help="build and verify an explicit null solution")
    add_common(sp)
    sp.add_argument("--dim", type=int, default=None)
    sp.add_argument("--freq", default=None, help='frequency, e.g. "1,0" or "1/2,0"')
    sp.add_argument("--auto", action="store_true",
                    help="search for a frequency via the emptiness engine")
    sp.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_INPUT_ERROR


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
