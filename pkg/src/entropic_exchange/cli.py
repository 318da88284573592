"""Command-line front end.

Exit status: 0 on success, 1 for invalid input (including bad arguments and
unwritable paths), 2 for numerical failures such as a bracket without a sign
change.
"""
from __future__ import annotations

import argparse
import math
import re
import sys

from .analysis import DEFAULT_N_POINTS, classify_extrema, crossing_q, exchange_report, sweep_theta
from .entropy import renyi_measure, shannon_entropy, tsallis_entropy
from .errors import BracketError, InvalidInputError, NumericalError
from .figures import figure_csv, figure_svg, get_preset
from .functionals import FunctionalSpec, Kind
from .qubit import ObservablePair
from .report import (
    RunReport,
    crossing_to_dict,
    curves_csv,
    exchange_to_dict,
    extrema_to_dict,
)
from .svg import line_chart

EXIT_INVALID = 1
EXIT_NUMERICAL = 2

_PI_EXPR = re.compile(r"^\s*(?:(\d*\.?\d+)\s*\*?\s*)?pi(?:\s*/\s*(\d*\.?\d+))?\s*$", re.I)


def parse_angle(text: str) -> float:
    """Radians, either a plain number or ``[k*]pi[/m]`` such as ``pi/4``."""
    m = _PI_EXPR.match(text)
    if m:
        k = float(m.group(1)) if m.group(1) else 1.0
        div = float(m.group(2)) if m.group(2) else 1.0
        return k * math.pi / div
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


def parse_probs(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _add_global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--n-points", type=int,
                        default=argparse.SUPPRESS if suppress else DEFAULT_N_POINTS,
                        help=f"theta or q grid size (default {DEFAULT_N_POINTS})")
    parser.add_argument("--out", default=default, help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "svg", "json"), default=default,
                        help="output format where a command offers a choice")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="entropic-exchange", description=__doc__.splitlines()[0])
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", help="Tsallis, Shannon and Renyi measures of a distribution")
    p.add_argument("probs", type=parse_probs, help="comma-separated probabilities, e.g. 0.8,0.2")
    p.add_argument("--q", type=float, required=True)

    p = sub.add_parser("sweep", help="one functional over theta in [0, pi)")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--delta", type=parse_angle, required=True)

    p = sub.add_parser("figure", help="data (or SVG) for one of figures 1-10")
    p.add_argument("figure_id", type=int)

    p = sub.add_parser("crossing", help="order q* where F'' at theta = delta/2 changes sign")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--delta", type=parse_angle, required=True)
    p.add_argument("--q-lo", type=float, required=True)
    p.add_argument("--q-hi", type=float, required=True)

    p = sub.add_parser("classify", help="extrema in theta, labelled by candidate state")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--q", type=float, nargs="+", required=True,
                   help="one or more orders; several give an exchange table")
    p.add_argument("--delta", type=parse_angle, required=True)

    for action in sub.choices.values():
        _add_global_flags(action, suppress=True)
    return parser


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def cmd_entropy(args):
    s = tsallis_entropy(args.probs, args.q)
    h = shannon_entropy(args.probs)
    r = renyi_measure(args.probs, args.q)
    _emit(f"S_q = {s:.15g}\nShannon = {h:.15g}\nR_q = {r:.15g}\n", args.out)


def cmd_sweep(args):
    spec = FunctionalSpec(args.kind, args.q)
    curve = sweep_theta(spec, ObservablePair(args.delta), args.n_points)
    if args.format == "svg":
        text = line_chart(curve.parameter.tolist(), {f"{spec.kind.value} q={spec.q:g}": curve.values.tolist()},
                          title=f"{spec.kind.value}, delta = {args.delta:g}", xlabel="theta",
                          ylabel=spec.kind.value)
    else:
        text = curves_csv("theta", curve.parameter, {"value": curve.values})
    _emit(text, args.out)


def cmd_figure(args):
    get_preset(args.figure_id)
    if args.format == "svg":
        text = figure_svg(args.figure_id, args.n_points)
    else:
        text = figure_csv(args.figure_id, args.n_points)
    _emit(text, args.out)


def cmd_crossing(args, argv):
    result = crossing_q(args.kind, ObservablePair(args.delta), (args.q_lo, args.q_hi))
    report = RunReport(
        command=argv,
        config={"kind": args.kind, "delta": args.delta, "tolerance": 1e-9,
                "theta": args.delta / 2},
        results={"crossing": crossing_to_dict(result)},
    )
    _emit(report.to_json(), args.out)


def cmd_classify(args, argv):
    pair = ObservablePair(args.delta)
    reports = [classify_extrema(FunctionalSpec(args.kind, q), pair, args.n_points) for q in args.q]
    results = {"extrema": [extrema_to_dict(r) for r in reports]}
    results["exchange"] = exchange_to_dict(exchange_report(args.kind, pair, args.q, args.n_points))
    report = RunReport(
        command=argv,
        config={"kind": args.kind, "delta": args.delta, "n_points": args.n_points,
                "theta_tolerance": 1e-10, "candidate_tolerance": 1e-6, "flat_tolerance": 1e-10},
        results=results,
    )
    _emit(report.to_json(), args.out)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        if args.command == "entropy":
            cmd_entropy(args)
        elif args.command == "sweep":
            cmd_sweep(args)
        elif args.command == "figure":
            cmd_figure(args)
        elif args.command == "crossing":
            cmd_crossing(args, ["entropic-exchange", *argv])
        elif args.command == "classify":
            cmd_classify(args, ["entropic-exchange", *argv])
    except BracketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"F''({exc.q_lo!r}) = {exc.f_lo!r}\nF''({exc.q_hi!r}) = {exc.f_hi!r}", file=sys.stderr)
        return EXIT_NUMERICAL
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (InvalidInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return 0


if __name__ == "__main__":
    sys.exit(main())
