"""Shared builders: named graphs, seeded random graphs, isomorphism-reduced
exhaustive corpora."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from signedlap import SignedWeightedGraph


def swg(n, edges) -> SignedWeightedGraph:
    return SignedWeightedGraph(n, tuple((u, v, Fraction(w)) for u, v, w in edges))


def complete_graph_edges(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def kn_with_reds(n, red_pairs) -> SignedWeightedGraph:
    red = {tuple(sorted(p)) for p in red_pairs}
    edges = [(u, v, -1 if (u, v) in red else 1) for u, v in complete_graph_edges(n)]
    return swg(n, edges)


def k4_shared() -> SignedWeightedGraph:
    return kn_with_reds(4, [(0, 1), (0, 2)])


def k4_disjoint() -> SignedWeightedGraph:
    return kn_with_reds(4, [(0, 1), (2, 3)])


def triangle_one_red() -> SignedWeightedGraph:
    # blacks (0,1),(0,2); red (1,2): crossing polynomial 1 - 2t
    return swg(3, [(0, 1, 1), (0, 2, 1), (1, 2, -1)])


def triangle_chain(r) -> SignedWeightedGraph:
    """r unit-black triangles glued at cut vertices, one red edge each;
    the crossing polynomial factors as prod_i (1 - 2 t_i)."""
    edges = []
    for i in range(r):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        edges += [(a, b, 1), (b, c, 1), (a, c, -1)]
    return swg(2 * r + 1, edges)


def random_fraction(rng: random.Random, num_max=9999, den_max=20) -> Fraction:
    return Fraction(rng.randint(1, num_max), rng.randint(1, den_max))


def random_connected_graph(
    rng: random.Random,
    n_min=3,
    n_max=8,
    extra_max=3,
    red_choices=(1, 2, 3),
    unit_weights=False,
    num_max=9999,
    den_max=20,
) -> SignedWeightedGraph:
    """Random spanning tree plus extra edges; connected by construction.

    Red edges are a random subset of positions (capped by the edge count);
    weights are random positive rationals negated on the reds, or all unit
    magnitudes when unit_weights is set.
    """
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    pairs: list[tuple[int, int]] = []
    present = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        key = (min(a, b), max(a, b))
        pairs.append(key)
        present.add(key)
    rest = [p for p in itertools.combinations(range(n), 2) if p not in present]
    rng.shuffle(rest)
    pairs += rest[: rng.randint(0, extra_max)]
    n_red = min(rng.choice(red_choices), len(pairs))
    red_pos = set(rng.sample(range(len(pairs)), n_red))
    edges = []
    for pos, (u, v) in enumerate(pairs):
        mag = Fraction(1) if unit_weights else random_fraction(rng, num_max, den_max)
        edges.append((u, v, -mag if pos in red_pos else mag))
    return swg(n, edges)


# ---------------------------------------------------------------------------
# Exhaustive corpus: connected graphs up to isomorphism, N <= 6

_CONNECTED_ISO_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def _connected_iso_reps(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Edge lists of all connected graphs on n labeled vertices, one canonical
    representative per isomorphism class (minimum edge bitmask over all vertex
    permutations)."""
    pairs = list(itertools.combinations(range(n), 2))
    m = len(pairs)
    idx = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << m, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(m)) & 1
    canon = np.full(1 << m, np.iinfo(np.int64).max, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        pmap = np.array(
            [idx[tuple(sorted((perm[a], perm[b])))] for a, b in pairs], dtype=np.int64
        )
        vals = bits @ (np.int64(1) << pmap)
        np.minimum(canon, vals, out=canon)
    reps = np.unique(canon)
    out = []
    for mask in reps.tolist():
        edge_list = tuple(pairs[k] for k in range(m) if mask >> k & 1)
        # connectivity over the full vertex set
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edge_list:
            parent[find(a)] = find(b)
        if len({find(v) for v in range(n)}) == 1:
            out.append(edge_list)
    return out


@pytest.fixture(scope="session")
def connected_iso_corpus():
    """{n: [edge list, ...]} for 2 <= n <= 6, with known class counts pinned."""
    corpus = {}
    for n in range(2, 7):
        reps = _connected_iso_reps(n)
        assert len(reps) == _CONNECTED_ISO_COUNTS[n], (n, len(reps))
        corpus[n] = reps
    return corpus
