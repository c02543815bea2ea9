#!/usr/bin/env python3
"""Benchmark the integer kernels: numba @njit vs numpy fallback vs pure ints.

Workloads mirror the ensemble hot loop at N=10: 9x9 integer Laplacian minors
for the determinant, dense adjacency BFS and component counts.  The numba
path is also what SIGNEDLAP_NUMBA=1 (default) selects at import time; run
with SIGNEDLAP_NUMBA=0 to force the numpy fallback package-wide.

Usage: python benchmarks/bench_kernels.py [--samples 2000] [--n 10]
"""

import argparse
import random
import time

import numpy as np

from signedlap import _kernels as ker
from signedlap.ensemble import EnsembleConfig, generate_records


def _laplacian_minor_batch(n_vertices, count, seed):
    rng = random.Random(seed)
    out = []
    total = n_vertices * (n_vertices - 1) // 2
    pairs = [(i, j) for i in range(n_vertices) for j in range(i + 1, n_vertices)]
    for _ in range(count):
        m = rng.randint(n_vertices, total)
        chosen = rng.sample(pairs, m)
        q = [[0] * n_vertices for _ in range(n_vertices)]
        for u, v in chosen:
            q[u][v] -= 1
            q[v][u] -= 1
            q[u][u] += 1
            q[v][v] += 1
        out.append([row[1:] for row in q[1:]])
    return out


def _adjacency_batch(n_vertices, count, seed):
    rng = random.Random(seed)
    batch = []
    for _ in range(count):
        adj = np.zeros((n_vertices, n_vertices), dtype=np.uint8)
        for i in range(n_vertices):
            for j in range(i + 1, n_vertices):
                if rng.random() < 0.4:
                    adj[i, j] = adj[j, i] = 1
        batch.append(adj)
    return batch


def _time(label, fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<32s} {best * 1e3:10.2f} ms")
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--n", type=int, default=10)
    args = ap.parse_args()

    print(f"active backend: {ker.backend()}  (SIGNEDLAP_NUMBA=0 forces numpy)")
    mats = _laplacian_minor_batch(args.n, args.samples, seed=1)
    arrs = [np.array(m, dtype=np.int64) for m in mats]

    print(f"\ndeterminant, {args.samples} Laplacian minors ({args.n - 1}x{args.n - 1}):")
    if ker._HAVE_NUMBA:
        ker._det_bareiss_i64_numba(arrs[0].copy())  # compile before timing
        t_nb = _time("numba int64 bareiss", lambda: [ker._det_bareiss_i64_numba(a.copy()) for a in arrs], 3)
    t_np = _time("numpy int64 bareiss", lambda: [ker._det_bareiss_i64_numpy(a.copy()) for a in arrs], 3)
    t_obj = _time("python arbitrary precision", lambda: [ker._det_bareiss_object(m) for m in mats], 3)
    if ker._HAVE_NUMBA:
        print(f"  numba speedup: {t_np / t_nb:.1f}x over numpy, {t_obj / t_nb:.1f}x over python ints")

    adjs = _adjacency_batch(args.n, args.samples, seed=2)
    print(f"\nBFS distances + component count, {args.samples} graphs:")
    if ker._HAVE_NUMBA:
        ker._bfs_numba(adjs[0], 0)
        ker._components_numba(adjs[0])
        t_nb = _time(
            "numba",
            lambda: [(ker._bfs_numba(a, 0), ker._components_numba(a)) for a in adjs],
            3,
        )
    t_np = _time(
        "numpy",
        lambda: [(ker._bfs_numpy(a, 0), ker._components_numpy(a)) for a in adjs],
        3,
    )
    if ker._HAVE_NUMBA:
        print(f"  numba speedup: {t_np / t_nb:.1f}x")

    print(f"\nend-to-end ensemble, N={args.n}, M=30, {args.samples} samples (current backend):")
    cfg = EnsembleConfig(args.n, (30,), args.samples, master_seed=9)
    _time("generate_records", lambda: generate_records(cfg), 1)


if __name__ == "__main__":
    main()
