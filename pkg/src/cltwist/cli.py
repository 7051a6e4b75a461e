"""Command-line front end.

Subcommands:

  sign P Q        twist sign of a blade pair, printed as +1 or -1
  mul EXPR        evaluate a multivector expression, print it canonically
  table N         full twist table (or --blocks for the letter view)
  trace P Q       bit-pair walk of the tree algorithm, one line per step
  selftest        exhaustive four-way and cocycle suites
  bench           time the sign algorithms on a fixed random workload

Exit codes: 0 success, 1 self-test failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import bench as bench_mod
from . import selftest as selftest_mod
from .kernel import ALGORITHMS, tree_trace
from .multivector import Algebra
from .notation import NotationError, UnrepresentableError
from .tables import (
    MAX_DIM,
    render_block_letters,
    render_table,
    table_blocks,
)

__all__ = ["main"]

_MU_VALUES = {"+1": 1, "-1": -1, "sym": None}


def _u64(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0 or value >> 64:
        raise argparse.ArgumentTypeError(
            f"blade index must be in 0..2**64-1, got {text}"
        )
    return value


def _dim(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if not 1 <= value <= MAX_DIM:
        raise argparse.ArgumentTypeError(
            f"dimension must be in 1..{MAX_DIM}, got {value}"
        )
    return value


def _positive(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"need a positive count, got {value}")
    return value


def _add_mu(parser, symbolic: bool = False):
    choices = ["+1", "-1", "sym"] if symbolic else ["+1", "-1"]
    parser.add_argument(
        "--mu", choices=choices, default="-1",
        help="generator square (default -1)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cltwist",
        description="Blade sign kernel, twist tables and multivectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sign = sub.add_parser("sign", help="twist sign of a blade pair")
    p_sign.add_argument("p", type=_u64)
    p_sign.add_argument("q", type=_u64)
    _add_mu(p_sign)
    p_sign.add_argument(
        "--algo", choices=sorted(ALGORITHMS), default="closed",
        help="sign algorithm (default closed)",
    )

    p_mul = sub.add_parser("mul", help="evaluate a multivector expression")
    p_mul.add_argument("expr")
    _add_mu(p_mul)
    p_mul.add_argument(
        "--i-form", action="store_true",
        help="print blades as i_<index> instead of e-form",
    )

    p_table = sub.add_parser("table", help="print a twist table")
    p_table.add_argument("n", type=_dim)
    _add_mu(p_table, symbolic=True)
    p_table.add_argument(
        "--format", choices=["text", "csv"], default="text",
    )
    p_table.add_argument(
        "--blocks", action="store_true",
        help="half-resolution letter view (always symbolic)",
    )

    p_trace = sub.add_parser("trace", help="tree walk of a blade pair")
    p_trace.add_argument("p", type=_u64)
    p_trace.add_argument("q", type=_u64)
    _add_mu(p_trace)

    p_self = sub.add_parser("selftest", help="exhaustive consistency suites")
    p_self.add_argument(
        "--n", type=_dim, default=selftest_mod.DEFAULT_N,
        help="bit width: checks all pairs below 2**n (default 8)",
    )

    p_bench = sub.add_parser("bench", help="time the sign algorithms")
    p_bench.add_argument(
        "--pairs", type=_positive, default=bench_mod.DEFAULT_PAIRS,
        help="workload size (default 1000000; the factor-list"
             " algorithm makes the full run take minutes)",
    )
    _add_mu(p_bench)

    return parser


def _cmd_sign(args) -> int:
    func = ALGORITHMS[args.algo]
    print(f"{func(args.p, args.q, _MU_VALUES[args.mu]):+d}")
    return 0


def _cmd_mul(args) -> int:
    algebra = Algebra(_MU_VALUES[args.mu])
    try:
        value = algebra.parse(args.expr)
    except NotationError as exc:
        print(f"cltwist mul: {exc}", file=sys.stderr)
        return 2
    if args.i_form:
        print(value.format("i"))
        return 0
    try:
        print(value.format("e"))
    except UnrepresentableError:
        # generators past the e-form alphabet: fall back silently
        print(value.format("i"))
    return 0


def _cmd_table(args) -> int:
    if args.blocks:
        if args.n < 2:
            print(
                "cltwist table: --blocks needs a dimension of at least 2",
                file=sys.stderr,
            )
            return 2
        sys.stdout.write(render_block_letters(args.n, args.format))
        return 0
    table = table_blocks(args.n)
    sys.stdout.write(render_table(table, args.format, _MU_VALUES[args.mu]))
    return 0


def _cmd_trace(args) -> int:
    mu = _MU_VALUES[args.mu]
    steps = tree_trace(args.p, args.q, mu)
    sign = 1
    for step in steps:
        print(f"({step.bit_p},{step.bit_q}) -> {step.state}")
        sign = step.sign
    print(f"clf = {sign:+d}")
    return 0


def _cmd_selftest(args) -> int:
    report = selftest_mod.run_selftest(args.n)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_bench(args) -> int:
    results = bench_mod.run_bench(args.pairs, _MU_VALUES[args.mu])
    sys.stdout.write(bench_mod.format_report(results))
    return 0


_DISPATCH = {
    "sign": _cmd_sign,
    "mul": _cmd_mul,
    "table": _cmd_table,
    "trace": _cmd_trace,
    "selftest": _cmd_selftest,
    "bench": _cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return _DISPATCH[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
