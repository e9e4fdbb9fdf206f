#!/usr/bin/env python3
"""Compare the compiled counting kernel against the pure-Python fallback.

Runs identical workloads through both implementations, checks that the
counts agree bit-for-bit, and prints timings with the speedup. The Python
kernel is the always-available baseline; the compiled kernel is what makes
budget-scale enumerations (10^8+ points) practical.

Usage: python benchmarks/bench_kernels.py [--workers N]
"""

import argparse
import time

from zetadiv.counting import count_affine, count_projective_complement
from zetadiv.field import make_field
from zetadiv.kernels import HAVE_COMPILED
from zetadiv.poly import MultiPoly, PolySystem


def workloads():
    f3 = make_field(3, 1)
    quadric = PolySystem(
        [MultiPoly.from_terms(f3, 3, [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)])],
        [[1]],
    )
    yield "quadric/F_3 affine nu=3 (19k pts)", lambda impl, w: count_affine(
        quadric, 3, workers=w, impl=impl
    )
    yield "quadric/F_3 affine nu=4 (531k pts)", lambda impl, w: count_affine(
        quadric, 4, workers=w, impl=impl
    )

    f5 = make_field(5, 1)
    mixed = PolySystem(
        [
            MultiPoly.from_terms(f5, 4, [((1, 1, 0, 0), 2), ((0, 0, 1, 1), 3), ((0, 0, 0, 1), 4)]),
            MultiPoly.from_terms(f5, 4, [((2, 0, 0, 0), 1), ((0, 3, 0, 0), 1)]),
        ],
        [[1, 0], [1, 2]],
    )
    yield "two-poly system/F_5 affine nu=2 (390k pts)", lambda impl, w: count_affine(
        mixed, 2, workers=w, impl=impl
    )

    f2 = make_field(2, 1)
    cubic = PolySystem(
        [MultiPoly.from_terms(f2, 3, [((3, 0, 0), 1), ((0, 2, 1), 1), ((0, 0, 3), 1)])],
        [[1]],
        mode="projective",
    )
    yield "cubic/F_2 projective complement nu=5 (1.1k pts)", lambda impl, w: (
        count_projective_complement(cubic, 5, workers=w, impl=impl)
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    impls = ["python"] + (["compiled"] if HAVE_COMPILED else [])
    if not HAVE_COMPILED:
        print("note: compiled kernel not built; timing the Python kernel only\n")

    header = f"{'workload':<48} " + " ".join(f"{impl:>12}" for impl in impls)
    if len(impls) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for name, run in workloads():
        times = {}
        results = {}
        for impl in impls:
            best = float("inf")
            for _ in range(2):
                t0 = time.perf_counter()
                results[impl] = run(impl, args.workers)
                best = min(best, time.perf_counter() - t0)
            times[impl] = best
        if len(impls) == 2 and results["python"] != results["compiled"]:
            raise SystemExit(
                f"MISMATCH on {name}: python={results['python']} compiled={results['compiled']}"
            )
        row = f"{name:<48} " + " ".join(f"{times[impl] * 1000:>10.1f}ms" for impl in impls)
        if len(impls) == 2:
            row += f" {times['python'] / times['compiled']:>8.1f}x"
        print(row)

    print("\ncounts agreed across implementations" if len(impls) == 2 else "")


if __name__ == "__main__":
    main()
