#!/usr/bin/env python3
"""Benchmark the compiled shortest-vector kernel against the pure twin.

Generates random integer lattices, runs both kernels on identical inputs,
checks the results agree, and prints per-dimension timings.

    python benchmarks/bench_svp.py [--trials N] [--seed S]
"""

import argparse
import random
import time

from latlab import ExactMatrix, _svp
from latlab.enumeration import _fits_compiled, compiled_available

try:
    from latlab import _svp_c
except ImportError:
    _svp_c = None


def random_gram(rnd, n, spread):
    while True:
        basis = [[rnd.randint(-spread, spread) for _ in range(n)] for _ in range(n)]
        if ExactMatrix.from_rows(basis).det() != 0:
            break
    return [
        [sum(basis[i][k] * basis[j][k] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def bench(trials, seed):
    rnd = random.Random(seed)
    print("compiled kernel available:", compiled_available())
    header = "%4s %8s %12s %12s %9s %12s" % (
        "dim", "cases", "pure [ms]", "compiled", "speedup", "nodes")
    print(header)
    print("-" * len(header))
    for n in (2, 3, 4, 5):
        cases = []
        while len(cases) < trials:
            gram = random_gram(rnd, n, 6)
            d, lam = _svp.integral_gso(gram)
            c0, seed_vec = _svp.initial_bound(gram)
            if _fits_compiled(gram, d, lam, c0):
                cases.append((gram, d, lam, c0, seed_vec))
        budget = 10**7

        t0 = time.perf_counter()
        pure = [_svp.search(g, d, lam, c0, sv, budget, _svp.IntRing)
                for g, d, lam, c0, sv in cases]
        t_pure = (time.perf_counter() - t0) * 1000

        if _svp_c is None:
            print("%4d %8d %12.2f %12s %9s %12d"
                  % (n, len(cases), t_pure, "-", "-",
                     sum(r[2] for r in pure)))
            continue

        t0 = time.perf_counter()
        comp = [_svp_c.search_int(g, d, lam, c0, sv, budget)
                for g, d, lam, c0, sv in cases]
        t_comp = (time.perf_counter() - t0) * 1000

        for a, b in zip(pure, comp):
            assert tuple(a) == tuple(b), "kernel disagreement: %r vs %r" % (a, b)
        print("%4d %8d %12.2f %12.2f %8.1fx %12d"
              % (n, len(cases), t_pure, t_comp, t_pure / max(t_comp, 1e-9),
                 sum(r[2] for r in pure)))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    bench(args.trials, args.seed)
