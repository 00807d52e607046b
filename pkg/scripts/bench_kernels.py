#!/usr/bin/env python3
"""Kernel timing sweep: hessenberg vs bareiss vs recurrence on one family.

Writes the same CSV as `appellseq bench` but adds a --step so long sweeps
can sample every few n, and a summary block with totals and peak
intermediate sizes.  Typical runs:

    python scripts/bench_kernels.py --family bernoulli --n 60
    python scripts/bench_kernels.py --family hyper-cauchy --m 2 --nn 3 \
        --order 2 --n 40 --step 4 --out bench.csv
"""

import argparse
import sys
from dataclasses import dataclass

from appellseq.cli import BENCH_METHODS, run_benchmark
from appellseq.families import FamilySpec


@dataclass
class BenchSettings:
    family: FamilySpec
    order: int
    n_max: int
    step: int
    out: str | None


def parse_args(argv=None) -> BenchSettings:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--family",
        default="bernoulli",
        choices=["bernoulli", "euler", "hyper-bernoulli", "hyper-cauchy"],
    )
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--nn", type=int, default=1)
    parser.add_argument("--order", type=int, default=1)
    parser.add_argument("--n", type=int, default=60)
    parser.add_argument("--step", type=int, default=1, help="report every step-th n")
    parser.add_argument("--out", help="write CSV here instead of stdout")
    args = parser.parse_args(argv)

    if args.family == "hyper-bernoulli":
        spec = FamilySpec.hyper_bernoulli(args.m, args.nn)
    elif args.family == "hyper-cauchy":
        spec = FamilySpec.hyper_cauchy(args.m, args.nn)
    elif args.family == "euler":
        spec = FamilySpec.euler()
    else:
        spec = FamilySpec.bernoulli()
    return BenchSettings(
        family=spec, order=args.order, n_max=args.n, step=max(1, args.step),
        out=args.out,
    )


def main(argv=None) -> int:
    settings = parse_args(argv)
    rows = run_benchmark(settings.family, settings.order, settings.n_max)

    lines = []
    header = ["n"]
    for method in BENCH_METHODS:
        header += [f"{method}_seconds", f"{method}_max_num_bits"]
    lines.append(",".join(header))
    for row in rows:
        if row.n % settings.step:
            continue
        cols = [str(row.n)]
        for method in BENCH_METHODS:
            cell = row.cells[method]
            cols += [f"{cell.seconds:.6f}", str(cell.max_num_bits)]
        lines.append(",".join(cols))
    csv_text = "\n".join(lines) + "\n"

    if settings.out:
        with open(settings.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)

    print(
        f"# {settings.family.label} r={settings.order}, n <= {settings.n_max}",
        file=sys.stderr,
    )
    for method in BENCH_METHODS:
        total = sum(row.cells[method].seconds for row in rows)
        peak = max(row.cells[method].max_num_bits for row in rows)
        print(
            f"# {method:<11} total {total:8.3f}s   peak intermediate {peak} bits",
            file=sys.stderr,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
