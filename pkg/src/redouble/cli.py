"""Command-line driver exposing the verification suites.

Writes one JSON report per invocation, to stdout or --out, with a fixed
key order and no timestamps, so a fixed seed reproduces the bytes
exactly; --timings adds a single wall-clock figure to the configuration
echo.  Exit status: 0 all checks pass, 1 hard failure, 2 failure
confined to the conjecture probes, 3 unusable configuration.
"""

from __future__ import annotations

import argparse
import sys
import time

from .suites import (SUITE_NAMES, SuiteConfig, exit_code_for, run_all,
                     run_suite)

CONFIG_ERROR = 3


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage failures exit with the config status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(CONFIG_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="redouble",
        description="Exact verification suites for braided matrix algebras,"
                    " their quantum doubles, and the shifted derivative"
                    " calculus.")
    parser.add_argument("--suite", required=True,
                        metavar="NAME",
                        help="one of: " + ", ".join(SUITE_NAMES)
                        + ", or 'all' for the acceptance grid")
    parser.add_argument("--n", type=int, default=2,
                        help="matrix rank (default 2)")
    parser.add_argument("--k", type=int, default=None,
                        help="power / monomial degree, suite-specific"
                        " default")
    parser.add_argument("--lambda", dest="shape", default=None,
                        metavar="PARTS",
                        help="partition as comma-separated parts, e.g. 2,1")
    parser.add_argument("--degree", type=int, default=None,
                        help="word-degree bound where a suite samples words")
    parser.add_argument("--mode", choices=("EXACT", "SAMPLED"),
                        default="EXACT")
    parser.add_argument("--samples", type=int, default=None,
                        help="sample-point count in SAMPLED mode")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for every randomized choice (default 0)")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="write the JSON report here instead of stdout")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for --suite all (default 1)")
    parser.add_argument("--timings", action="store_true",
                        help="record the wall time in the report")
    return parser


def _parse_shape(text: str, parser: argparse.ArgumentParser) -> tuple:
    try:
        shape = tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"--lambda expects comma-separated integers, got "
                     f"{text!r}")
    if any(p < 1 for p in shape) or \
            any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        parser.error(f"--lambda must be a weakly decreasing partition, got "
                     f"{text!r}")
    return shape


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.suite != "all" and args.suite not in SUITE_NAMES:
        parser.error(f"unknown suite {args.suite!r}")
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    shape = _parse_shape(args.shape, parser) if args.shape else None

    started = time.perf_counter()
    try:
        if args.suite == "all":
            report = run_all(mode=args.mode, seed=args.seed, jobs=args.jobs)
        else:
            report = run_suite(SuiteConfig(
                args.suite, n=args.n, k=args.k, shape=shape,
                degree=args.degree, mode=args.mode, samples=args.samples,
                seed=args.seed))
    except ValueError as err:
        parser.error(str(err))
    if args.timings:
        report.config["wall_time_ms"] = round(
            (time.perf_counter() - started) * 1000, 3)

    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(report.summary_line() + "\n")
    return exit_code_for(report)


if __name__ == "__main__":
    sys.exit(main())
