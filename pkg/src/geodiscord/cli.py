"""Command-line front end: ``geodiscord {figure,measure,threshold,verify,sweep}``."""

from __future__ import annotations

import argparse
import sys

from .discord import METHODS, bures_discord, trace_discord
from .experiments import FIGURES, ConfigError, run_figure, run_sweep, threshold_alpha2
from .quantum import InvalidStateError, check_density_matrix, read_matrix
from .verify import run_suites

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


def _cmd_figure(args) -> int:
    csv_path, svg_path = run_figure(args.id, args.out)
    print(csv_path)
    print(svg_path)
    return EXIT_OK


def _cmd_measure(args) -> int:
    rho = check_density_matrix(read_matrix(args.file))
    func = trace_discord if args.measure == "trace" else bures_discord
    value, route = func(rho, method=args.method)
    print(f"{value:.12f}")
    print(f"route: {route}")
    return EXIT_OK


def _cmd_threshold(args) -> int:
    print(f"{threshold_alpha2():.6f}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    print(f"seed={args.seed} samples={args.samples}")
    results = run_suites(args.seed, args.samples)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERIC


def _cmd_sweep(args) -> int:
    print(run_sweep(args.config))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geodiscord", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("figure", help="reproduce a figure as CSV + SVG")
    p.add_argument("id", choices=sorted(FIGURES))
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("measure", help="evaluate a discord measure on a matrix file")
    p.add_argument("file")
    p.add_argument("--measure", choices=("trace", "bures"), required=True)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("threshold", help="alpha2 below which the common reservoir raises D_T")
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="run a key = value sweep config")
    p.add_argument("config")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidStateError as exc:
        print(f"error: invalid state ({exc})", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
