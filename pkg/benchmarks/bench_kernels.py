#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Covers the two hot loops: the admissible-character count (on the largest
table case, |L| = 5040 at n = 840, plus a mid-size case) and the census
subset scan at bounds 4 and 5.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--skip-census-5]
"""

import argparse
import time

from delsarte import _kernels, _speedups_py
from delsarte.catalog import load_catalog
from delsarte.lattice import _group_cells, homogenize, lattice_generators

if _kernels.HAVE_COMPILED:
    from delsarte import _speedups as compiled
else:
    compiled = None


def best_of(repeat, func, *args):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, value


def run_case(name, repeat, func_name, *args):
    py_time, py_value = best_of(repeat, getattr(_speedups_py, func_name), *args)
    row = f"{name:<38} python {py_time:>9.4f}s"
    if compiled is not None:
        c_time, c_value = best_of(repeat, getattr(compiled, func_name), *args)
        assert c_value == py_value, f"{name}: kernel disagreement"
        row += f"   c {c_time:>9.4f}s   speedup {py_time / c_time:>7.1f}x"
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    parser.add_argument(
        "--skip-census-5", action="store_true", help="skip the slowest pure-Python case"
    )
    args = parser.parse_args()

    catalog = load_catalog()
    cases = []
    for family, n in (("1d", 60), ("1b", 840)):
        matrix = homogenize(catalog.family_terms(family, n))
        cells, modulus = _group_cells(lattice_generators(matrix))
        cases.append((f"count_lambda {family} n={n} (|L|={len(cells)})",
                      ("count_lambda", cells, modulus)))
    cases.append(("census bound 4 (245k subsets)", ("one_interior_polygons", 4)))
    if not args.skip_census_5:
        cases.append(("census bound 5 (2.39M subsets)", ("one_interior_polygons", 5)))

    if compiled is None:
        print("compiled kernels not built; timing the pure-Python fallback only")
    for name, func_args in cases:
        run_case(name, args.repeat, *func_args)


if __name__ == "__main__":
    main()
