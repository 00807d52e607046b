"""Command-line front end: compute tables, cross-verify, emit CSV/JSON,
and run the determinant-kernel micro-benchmark.

Exit codes: 0 success, 2 usage or configuration error, 3 enumeration cap
exceeded, 4 cross-verification or kernel mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import determinants, engine
from .arith import DEFAULT_COMPOSITION_CAP, CombinatorialBlowupError, parse_rational
from .engine import (
    NormalizationError,
    RelatedNumberTable,
    appell_polynomial,
    cross_verify,
    polynomial_eval,
    recurrence_values,
)
from .families import FamilySpec, family_coefficients, load_custom_family

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4

BENCH_METHODS = ("hessenberg", "bareiss", "recurrence")


class KernelMismatchError(RuntimeError):
    """Benchmark refused to report timings because the kernels disagreed."""


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""

    family: FamilySpec
    order: int
    n_max: int
    algorithm: str = "recurrence"
    kernel: str = "hessenberg"
    fmt: str = "pretty"
    check: bool = False
    cap: int = DEFAULT_COMPOSITION_CAP

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"--order must be >= 1, got {self.order}")
        if self.n_max < 0:
            raise ValueError(f"--n must be >= 0, got {self.n_max}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="appellseq",
        description=(
            "Exact related numbers a_n^(r) and polynomials A_n^(r)(z) of "
            "higher-order Appell sequences (Bernoulli, Euler, hypergeometric "
            "Bernoulli and Cauchy)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser):
        p.add_argument(
            "--family",
            required=True,
            choices=["bernoulli", "euler", "hyper-bernoulli", "hyper-cauchy", "custom"],
        )
        p.add_argument("--m", type=int, default=1, help="family parameter M (default 1)")
        p.add_argument("--nn", type=int, default=1, help="family parameter N (default 1)")
        p.add_argument("--order", type=int, default=1, help="order r (default 1)")
        p.add_argument("--n", type=int, required=True, help="compute n = 0..N")
        p.add_argument("--custom-path", help="coefficient file for --family custom")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_COMPOSITION_CAP,
            help=f"composition enumeration cap (default {DEFAULT_COMPOSITION_CAP})",
        )

    p_compute = sub.add_parser("compute", help="tabulate a_n^(r) for n = 0..N")
    add_common(p_compute)
    p_compute.add_argument(
        "--algo",
        choices=["recurrence", "determinant", "composition", "all"],
        default="recurrence",
    )
    p_compute.add_argument(
        "--kernel", choices=["hessenberg", "bareiss"], default="hessenberg"
    )
    p_compute.add_argument(
        "--format", dest="fmt", choices=["csv", "json", "pretty"], default="pretty"
    )
    p_compute.add_argument(
        "--check",
        action="store_true",
        help="cross-verify all algorithms and fail on any disagreement",
    )
    p_compute.set_defaults(func=cmd_compute)

    p_poly = sub.add_parser(
        "poly", help="coefficients of A_n^(r)(z), or its exact value at --z"
    )
    add_common(p_poly)
    p_poly.add_argument("--z", help="evaluation point as p/q (omit to print coefficients)")
    p_poly.add_argument(
        "--format", dest="fmt", choices=["csv", "json", "pretty"], default="pretty"
    )
    p_poly.set_defaults(func=cmd_poly)

    p_bench = sub.add_parser(
        "bench", help="time the determinant kernels and the recurrence per n"
    )
    add_common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def family_from_args(args: argparse.Namespace) -> FamilySpec:
    name = args.family
    if name == "bernoulli":
        return FamilySpec.bernoulli()
    if name == "euler":
        return FamilySpec.euler()
    if name == "hyper-bernoulli":
        return FamilySpec.hyper_bernoulli(args.m, args.nn)
    if name == "hyper-cauchy":
        return FamilySpec.hyper_cauchy(args.m, args.nn)
    if not args.custom_path:
        raise ValueError("--family custom requires --custom-path")
    return load_custom_family(args.custom_path)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        family=family_from_args(args),
        order=args.order,
        n_max=args.n,
        algorithm=getattr(args, "algo", "recurrence"),
        kernel=getattr(args, "kernel", "hessenberg"),
        fmt=getattr(args, "fmt", "pretty"),
        check=getattr(args, "check", False),
        cap=args.cap,
    )


def _compute_table(config: RunConfig) -> RelatedNumberTable:
    seq = family_coefficients(config.family, config.n_max)
    algo = config.algorithm
    if algo == "recurrence":
        return engine.related_numbers_recurrence(seq, config.order, config.n_max)
    if algo == "determinant":
        return engine.related_numbers_determinant(
            seq, config.order, config.n_max, kernel=config.kernel
        )
    if algo == "composition":
        return engine.related_numbers_composition(
            seq, config.order, config.n_max, cap=config.cap
        )
    # algo == "all": any verified route will do; the recurrence is cheapest.
    return engine.related_numbers_recurrence(seq, config.order, config.n_max)


def cmd_compute(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    seq = family_coefficients(config.family, config.n_max)
    if config.check or config.algorithm == "all":
        report = cross_verify(seq, config.order, config.n_max, cap=config.cap)
        if not report.agree:
            print(f"cross-verification failed: {report.describe()}", file=sys.stderr)
            return EXIT_MISMATCH
    table = _compute_table(config)
    emit_table(table, config)
    return EXIT_OK


def emit_table(table: RelatedNumberTable, config: RunConfig):
    if config.fmt == "csv":
        print("n,value")
        for n, value in enumerate(table.a):
            print(f"{n},{value}")
    elif config.fmt == "json":
        doc = {
            "family": config.family.label,
            "order": table.r,
            "values": [{"n": n, "value": str(v)} for n, v in enumerate(table.a)],
        }
        print(json.dumps(doc, indent=2))
    else:
        width = len(str(table.n_max))
        for n, value in enumerate(table.a):
            print(f"{n:>{width}}  {value}")


def cmd_poly(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    seq = family_coefficients(config.family, config.n_max)
    table = engine.related_numbers_recurrence(seq, config.order, config.n_max)
    poly = appell_polynomial(table, config.n_max)
    if args.z is not None:
        value = polynomial_eval(poly, parse_rational(args.z))
        if config.fmt == "json":
            doc = {
                "family": config.family.label,
                "order": poly.r,
                "n": poly.n,
                "z": args.z,
                "value": str(value),
            }
            print(json.dumps(doc, indent=2))
        else:
            print(value)
    else:
        if config.fmt == "json":
            doc = {
                "family": config.family.label,
                "order": poly.r,
                "n": poly.n,
                "coeffs": [str(c) for c in poly.coeffs_in_z],
            }
            print(json.dumps(doc, indent=2))
        else:
            print(", ".join(str(c) for c in poly.coeffs_in_z))
    return EXIT_OK


@dataclass
class BenchCell:
    seconds: float
    max_num_bits: int
    value: Fraction


@dataclass
class BenchRow:
    n: int
    cells: dict[str, BenchCell]


def run_benchmark(spec: FamilySpec, r: int, n_max: int) -> list[BenchRow]:
    """Per-n wall time and peak intermediate size for every kernel.

    The shared D table is prepared outside the timers, so each cell
    measures determinant (or recurrence) evaluation only.  All methods
    must produce identical values; otherwise no timings are reported.
    """
    seq = family_coefficients(spec, n_max)
    D = engine.compute_D(seq, r, n_max).D
    fact = 1
    rows = []
    for n in range(n_max + 1):
        if n:
            fact *= n
        cells: dict[str, BenchCell] = {}

        stats: dict[str, int] = {}
        t0 = time.perf_counter()
        dets = determinants.hessenberg_leading_minors(D, n, stats=stats)
        dt = time.perf_counter() - t0
        value = fact * dets[n] if n % 2 == 0 else -fact * dets[n]
        cells["hessenberg"] = BenchCell(dt, stats.get("max_num_bits", 0), value)

        stats = {}
        if n == 0:
            t0 = time.perf_counter()
            det = Fraction(1)
            dt = time.perf_counter() - t0
        else:
            matrix = determinants.related_matrix(D, n)
            t0 = time.perf_counter()
            det = determinants.bareiss_det(matrix, stats=stats)
            dt = time.perf_counter() - t0
        value = fact * det if n % 2 == 0 else -fact * det
        cells["bareiss"] = BenchCell(dt, stats.get("max_num_bits", 0), value)

        stats = {}
        t0 = time.perf_counter()
        a = recurrence_values(D, n, stats=stats)
        dt = time.perf_counter() - t0
        cells["recurrence"] = BenchCell(dt, stats.get("max_num_bits", 0), a[n])

        rows.append(BenchRow(n=n, cells=cells))

    for row in rows:
        values = {m: c.value for m, c in row.cells.items()}
        if len(set(values.values())) != 1:
            detail = ", ".join(f"{m}={v}" for m, v in values.items())
            raise KernelMismatchError(
                f"kernel disagreement at n={row.n}: {detail}; refusing to emit timings"
            )
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    config = config_from_args(args)
    rows = run_benchmark(config.family, config.order, config.n_max)
    header = ["n"]
    for method in BENCH_METHODS:
        header += [f"{method}_seconds", f"{method}_max_num_bits"]
    header.append("value")
    print(",".join(header))
    for row in rows:
        cols = [str(row.n)]
        for method in BENCH_METHODS:
            cell = row.cells[method]
            cols += [f"{cell.seconds:.6f}", str(cell.max_num_bits)]
        cols.append(str(row.cells["recurrence"].value))
        print(",".join(cols))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except CombinatorialBlowupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except KernelMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (NormalizationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
