"""Compare the compiled and numpy F_p rank kernels.

Usage: python3 benchmarks/bench_rank.py [--repeat N]

Two workloads: random dense blocks of growing size, and the full Koszul
differentials behind the (P^3, O(2)) N_5 check (rank summed over components).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from syzcert.koszul import veronese_ring
from syzcert.koszul.complex import differential_coo
from syzcert.koszul.linalg import available_backends, dense_rank_modp, random_primes, rank_fp

PRIME = random_primes(1, seed=7)[0]


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def dense_workload(repeat: int) -> None:
    rng = np.random.default_rng(0)
    print(f"{'size':>6} " + " ".join(f"{b:>10}" for b in available_backends()) + "  ranks")
    for size in (50, 100, 200, 400):
        A = rng.integers(-1, 2, size=(size, size), dtype=np.int64)
        times, ranks = [], []
        for backend in available_backends():
            times.append(_best_of(lambda: dense_rank_modp(A, PRIME, backend), repeat))
            ranks.append(dense_rank_modp(A, PRIME, backend))
        assert len(set(ranks)) == 1, ranks
        print(f"{size:>6} " + " ".join(f"{t:>9.4f}s" for t in times) + f"  {ranks[0]}")


def koszul_workload(repeat: int) -> None:
    ring = veronese_ring(3, 2, q_max=4)
    cells = [(p, q) for p in range(1, 8) for q in (1, 2, 3)]
    matrices = [differential_coo(ring, p, q) for p, q in cells]
    print(f"\nKoszul differentials of (P^3, O(2)): {len(matrices)} matrices")
    for backend in available_backends():
        t = _best_of(lambda: [rank_fp(m, PRIME, backend) for m in matrices], repeat)
        print(f"  {backend:>8}: {t:.3f}s")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if len(available_backends()) < 2:
        print("compiled kernel not built; only the numpy backend is available")
    dense_workload(args.repeat)
    koszul_workload(args.repeat)


if __name__ == "__main__":
    main()
