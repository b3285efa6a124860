"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Run as a script:

    python benchmarks/bench_kernels.py [--repeat 3]

Enumeration is the hot loop of every verification sweep, so this is the
number that matters when deciding whether building the extension is worth it.
"""

from __future__ import annotations

import argparse
import time

from fusionkit import kernels

WORKLOADS = [
    (3, 3, 3),
    (4, 4, 4),
    (2, 2, 2, 2, 2),
    (4, 4, 4, 4),
    (3, 3, 3, 3, 3),
    (4, 4, 4, 4, 4),
    (4, 4, 4, 4, 4, 4),
    (4, 4, 4, 4, 4, 4, 4, 4),
]


def best_time(fn, sizes, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(sizes)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    table = kernels.backends()
    if "compiled" not in table:
        print("compiled kernel not built; timing the pure-Python kernel only")

    header = f"{'boxes':>18} {'matches':>9}" + "".join(f" {name:>12}" for name in table)
    if len(table) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for sizes in WORKLOADS:
        count = len(table["python"](sizes))
        times = {name: best_time(fn, sizes, args.repeat) for name, fn in table.items()}
        row = f"{str(sizes):>18} {count:>9}" + "".join(
            f" {times[name] * 1000:>10.2f}ms" for name in table
        )
        if len(table) == 2:
            row += f" {times['python'] / times['compiled']:>8.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
