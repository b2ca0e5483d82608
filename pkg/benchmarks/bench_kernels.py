"""Compare the compiled and pure-Python predicate kernels.

Run with ``python benchmarks/bench_kernels.py [--repeat R]``.  Each row times
full validation (every flag, including the quartic concyclicity scan) of a
fixed polygon, plus end-to-end generation of 12-gons.
"""

import argparse
import timeit

from hypfour import kernels
from hypfour.generator import GenSpec, generate
from hypfour.polygon import validate


def bench(stmt, repeat):
    return min(timeit.repeat(stmt, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    names = [b for b in ("cython", "python") if b in kernels.BACKENDS]
    if len(names) < 2:
        print("compiled kernels are not built; only the fallback is available")

    print(f"{'case':<24}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) == 2 else ""))
    for n in (6, 12, 24):
        P, _ = generate(GenSpec(n, 1))
        times = [bench(lambda: validate(P, backend=b), args.repeat) for b in names]
        _row(f"validate n={n}", times)
    seeds = range(20)
    times = [bench(lambda: [generate(GenSpec(12, s), backend=b) for s in seeds], args.repeat) for b in names]
    _row("generate 20 x n=12", times)


def _row(label, times):
    cells = "".join(f"{t * 1e3:>10.2f}ms" for t in times)
    extra = f"{times[1] / times[0]:>11.1f}x" if len(times) == 2 else ""
    print(f"{label:<24}{cells}{extra}")


if __name__ == "__main__":
    main()
