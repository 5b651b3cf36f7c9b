#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Times the two hot loops on representative workloads: exhaustive coboundary
search (worst case: proving a nonsplit class has no witness) and full
enumeration of normalized symmetric cocycle tables.  Run from the repository
root after building the extension:

    python benchmarks/bench_kernels.py           # moderate sizes
    python benchmarks/bench_kernels.py --full    # adds the 2M-table case
"""

import argparse
import sys
import time

from monopair import _kernels
from monopair.extpan.bruteforce import count_cocycles_mod
from monopair.extpan.cocycles import _ext1_classes_unchecked
from monopair.extpan.groups import FinAbGroup


def _pair_sweep(q_factors, t_factors):
    """All pairwise cohomology decisions between class representatives, each
    by exhaustive witness search.  The flat problems are built up front so the
    timed region is the kernel alone."""
    q = FinAbGroup(q_factors)
    t = FinAbGroup(t_factors)
    classes = _ext1_classes_unchecked(q, t)
    qops = q.ops()
    tops = t.ops()
    q_add = [v for row in qops.add for v in row]
    cons, offsets = _kernels.coboundary_constraints(q_add, qops.n)
    t_add = [v for row in tops.add for v in row]
    t_neg = list(tops.neg)
    diffs = []
    for x in classes:
        for y in classes:
            diffs.append(
                [
                    tops.add[u][tops.neg[v]]
                    for rx, ry in zip(x.cocycle.matrix, y.cocycle.matrix)
                    for u, v in zip(rx, ry)
                ]
            )

    def run(impl):
        return [
            impl.search_coboundary(qops.n, tops.n, t_add, t_neg, d, cons, offsets)
            is not None
            for d in diffs
        ]

    return run


def _time(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the largest case")
    args = parser.parse_args(argv)

    backends = _kernels.backends()
    if "compiled" not in backends:
        print("compiled backend not built; timing the pure backend only")

    jobs = [
        ("search sweep Q=(2,2)   T=(4,2)", _pair_sweep((2, 2), (4, 2))),
        ("search sweep Q=(2,2,2) T=(2,2)", _pair_sweep((2, 2, 2), (2, 2))),
        ("search sweep Q=(4,2)   T=(4,2)", _pair_sweep((4, 2), (4, 2))),
        (
            "count tables Q=(7,)    n=7",
            lambda impl: count_cocycles_mod(FinAbGroup((7,)), 7, backend=impl),
        ),
        (
            "count tables Q=(8,)    n=4",
            lambda impl: count_cocycles_mod(FinAbGroup((8,)), 4, backend=impl),
        ),
        (
            "count tables Q=(2,2,2) n=4",
            lambda impl: count_cocycles_mod(FinAbGroup((2, 2, 2)), 4, backend=impl),
        ),
    ]
    if args.full:
        jobs.append(
            (
                "search sweep Q=(2,2,2) T=(2,2,2)",
                _pair_sweep((2, 2, 2), (2, 2, 2)),
            )
        )
    if args.full:
        jobs.append(
            (
                "count tables Q=(8,)    n=8",
                lambda impl: count_cocycles_mod(FinAbGroup((8,)), 8, backend=impl),
            )
        )

    width = max(len(name) for name, _ in jobs)
    header = "%-*s  %12s  %12s  %8s" % (width, "workload", "pure", "compiled", "ratio")
    print(header)
    print("-" * len(header))
    for name, job in jobs:
        row = "%-*s" % (width, name)
        pure_result, pure_t = _time(lambda: job(backends["pure"]))
        row += "  %10.4fs" % pure_t
        if "compiled" in backends:
            comp_result, comp_t = _time(lambda: job(backends["compiled"]))
            if comp_result != pure_result:
                print(row)
                raise SystemExit("backend results differ on %r" % name)
            row += "  %10.4fs  %7.1fx" % (comp_t, pure_t / comp_t if comp_t else float("inf"))
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
