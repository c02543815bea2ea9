"""Signed weighted graphs with exact rational weights.

Edges carry nonzero Fractions; the sign encodes the coloring (positive =
black, negative = red).  Red edges are indexed 0..R-1 by their position in
the edge sequence, never by weight magnitude.  Also provides deletion /
contraction minors and the exhaustive spanning-tree / 2-forest enumerations
used as brute-force oracles throughout the test suite.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

# Enumeration oracles are exponential; they are meant for corpus-sized inputs.
ORACLE_MAX_VERTICES = 12
_ORACLE_MAX_SUBSETS = 4_000_000

Edge = tuple[int, int, Fraction]


def _as_weight(w) -> Fraction:
    if isinstance(w, Fraction):
        return w
    if isinstance(w, int):
        return Fraction(w)
    if isinstance(w, str):
        try:
            return Fraction(w)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse weight {w!r} as a rational") from exc
    raise InputError(f"weight must be a rational string or integer, got {type(w).__name__}")


@dataclass(frozen=True)
class SignedWeightedGraph:
    """Immutable simple graph on vertices 0..n-1 with signed rational weights."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.n!r}")
        seen: set[tuple[int, int]] = set()
        norm: list[Edge] = []
        for pos, (u, v, w) in enumerate(self.edges):
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge {pos}: endpoints must be integers")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {pos} ({u},{v}): vertex id out of range 0..{self.n - 1}")
            if u == v:
                raise InputError(f"edge {pos} ({u},{v}): self-loop")
            w = _as_weight(w)
            if w == 0:
                raise InputError(f"edge {pos} ({u},{v}): zero weight (a zero weight means no edge)")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"edge {pos} ({u},{v}): duplicate edge")
            seen.add((u, v))
            norm.append((u, v, w))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def red_indices(self) -> tuple[int, ...]:
        """Edge-sequence positions of the red (negative-weight) edges."""
        return tuple(i for i, (_, _, w) in enumerate(self.edges) if w < 0)

    @property
    def red_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e[2] < 0)

    @property
    def black_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e[2] > 0)

    @property
    def red_count(self) -> int:
        return len(self.red_edges)

    @property
    def black_count(self) -> int:
        return len(self.black_edges)

    def canonical_key(self):
        """Hashable structural identity (vertex count + sorted edge list)."""
        return (self.n, tuple(sorted(self.edges)))


def parse_graph(document) -> SignedWeightedGraph:
    """Build a graph from the JSON wire format.

    ``{"n": <int>, "edges": [{"u": <int>, "v": <int>, "w": "<p>/<q>" | "<p>"}, ...]}``

    Weights are exact rational strings (integers also accepted); the sign of
    the weight determines the color.  ``document`` may be the JSON text or an
    already-decoded dict.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed graph JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise InputError("graph document must be a JSON object")
    if "n" not in document or "edges" not in document:
        raise InputError('graph document needs keys "n" and "edges"')
    n = document["n"]
    if not isinstance(n, int):
        raise InputError('"n" must be an integer')
    raw = document["edges"]
    if not isinstance(raw, list):
        raise InputError('"edges" must be a list')
    edges = []
    for pos, item in enumerate(raw):
        if not isinstance(item, dict) or not {"u", "v", "w"} <= set(item):
            raise InputError(f'edge {pos}: each edge needs keys "u", "v", "w"')
        if isinstance(item["w"], float):
            raise InputError(f"edge {pos}: weights must be exact rational strings, not floats")
        edges.append((item["u"], item["v"], item["w"]))
    return SignedWeightedGraph(n, tuple(edges))


def graph_to_dict(g: SignedWeightedGraph) -> dict:
    return {
        "n": g.n,
        "edges": [{"u": u, "v": v, "w": str(w)} for u, v, w in g.edges],
    }


# ---------------------------------------------------------------------------
# Connectivity


class _UnionFind:
    __slots__ = ("parent", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.count -= 1
        return True


def _component_count(n: int, pairs: Iterable[tuple[int, int]]) -> int:
    uf = _UnionFind(n)
    for u, v in pairs:
        uf.union(u, v)
    return uf.count


def component_counts(g: SignedWeightedGraph) -> tuple[int, int, int]:
    """(c(G), c(G_+), c(G_-)): component counts of the full graph, the
    black-only subgraph and the red-only subgraph, all over the full vertex
    set (isolated vertices count)."""
    c_all = _component_count(g.n, ((u, v) for u, v, _ in g.edges))
    c_plus = _component_count(g.n, ((u, v) for u, v, w in g.edges if w > 0))
    c_minus = _component_count(g.n, ((u, v) for u, v, w in g.edges if w < 0))
    return c_all, c_plus, c_minus


def is_connected(g: SignedWeightedGraph) -> bool:
    return _component_count(g.n, ((u, v) for u, v, _ in g.edges)) == 1


# ---------------------------------------------------------------------------
# Deletion / contraction


@dataclass(frozen=True)
class MinorResult:
    """Internal record of a deletion/contraction pass.

    vertex_map[old_vertex] = new vertex id (classes renumbered by their
    minimal original member, so composed minors stay comparable).
    red_map[old_red_index] = new red index, or None if the edge became a loop
    or was merged away.  merged_positions flags new-graph edge positions whose
    weight is a sum of two or more original edges.
    """

    graph: SignedWeightedGraph
    vertex_map: tuple[int, ...]
    red_map: dict[int, int | None] = field(compare=False)
    merged_positions: frozenset[int] = frozenset()


def minor_with_info(
    g: SignedWeightedGraph,
    contract: Iterable[int],
    delete: Iterable[int],
) -> MinorResult:
    """Contract / delete red edges by red index (0-based).

    Contraction identifies endpoints simultaneously (union-find over the whole
    contract set), sums weights of parallel survivors, drops self-loops and
    exact-zero merged weights.  Surviving edges keep the order of their first
    appearance in the original sequence.
    """
    contract = frozenset(contract)
    delete = frozenset(delete)
    if contract & delete:
        raise InputError(f"contract and delete sets overlap: {sorted(contract & delete)}")
    reds = g.red_indices
    r = len(reds)
    for idx in contract | delete:
        if not (isinstance(idx, int) and 0 <= idx < r):
            raise InputError(f"red index {idx!r} out of range 0..{r - 1}")

    uf = _UnionFind(g.n)
    for ri in contract:
        u, v, _ = g.edges[reds[ri]]
        uf.union(u, v)
    roots = sorted({uf.find(v) for v in range(g.n)})
    # classes renumbered by minimal original member
    min_member = {root: min(v for v in range(g.n) if uf.find(v) == root) for root in roots}
    order = sorted(roots, key=lambda root: min_member[root])
    new_id = {root: i for i, root in enumerate(order)}
    vmap = tuple(new_id[uf.find(v)] for v in range(g.n))

    removed = {reds[ri] for ri in contract | delete}
    acc: dict[tuple[int, int], Fraction] = {}
    first_pos: dict[tuple[int, int], int] = {}
    members: dict[tuple[int, int], list[int]] = {}
    for pos, (u, v, w) in enumerate(g.edges):
        if pos in removed:
            continue
        a, b = vmap[u], vmap[v]
        if a == b:
            continue  # self-loop after contraction: contributes nothing
        key = (a, b) if a < b else (b, a)
        if key in acc:
            acc[key] += w
        else:
            acc[key] = w
            first_pos[key] = pos
        members.setdefault(key, []).append(pos)

    kept = sorted((k for k, w in acc.items() if w != 0), key=lambda k: first_pos[k])
    new_edges = tuple((k[0], k[1], acc[k]) for k in kept)
    new_graph = SignedWeightedGraph(len(order), new_edges)

    pos_of = {k: i for i, k in enumerate(kept)}
    merged = frozenset(pos_of[k] for k in kept if len(members[k]) > 1)
    new_reds = new_graph.red_indices
    red_pos_to_idx = {p: i for i, p in enumerate(new_reds)}
    red_map: dict[int, int | None] = {}
    for old_idx, pos in enumerate(reds):
        if pos in removed:
            continue
        u, v, _ = g.edges[pos]
        a, b = vmap[u], vmap[v]
        if a == b:
            red_map[old_idx] = None
            continue
        key = (a, b) if a < b else (b, a)
        new_pos = pos_of.get(key)
        if new_pos is None or new_graph.edges[new_pos][2] >= 0:
            red_map[old_idx] = None  # merged away or sign flipped by a merge
        else:
            red_map[old_idx] = red_pos_to_idx[new_pos]
    return MinorResult(new_graph, vmap, red_map, merged)


def minor(g: SignedWeightedGraph, contract: Iterable[int], delete: Iterable[int]) -> SignedWeightedGraph:
    """Graph minor: contract the red edges in ``contract`` (by red index),
    delete those in ``delete``; the sets must be disjoint."""
    return minor_with_info(g, contract, delete).graph


def red_subset_is_forest(g: SignedWeightedGraph, indices: Iterable[int]) -> bool:
    """Whether the given red edges form a forest.  A cyclic subset can never
    lie inside a spanning tree, so its crossing coefficient is zero."""
    reds = g.red_indices
    uf = _UnionFind(g.n)
    for ri in indices:
        u, v, _ = g.edges[reds[ri]]
        if not uf.union(u, v):
            return False
    return True


# ---------------------------------------------------------------------------
# Spanning tree / 2-forest enumeration (oracles)


@dataclass(frozen=True)
class SpanningTree:
    edge_indices: tuple[int, ...]
    pi: Fraction        # product over all edge weights in the tree
    pi_black: Fraction  # product over black edge weights only


@dataclass(frozen=True)
class TwoForest:
    edge_indices: tuple[int, ...]
    parts: tuple[frozenset[int], frozenset[int]]
    epsilon: int
    pi: Fraction


def _check_oracle_size(g: SignedWeightedGraph):
    if g.n > ORACLE_MAX_VERTICES:
        raise InputError(
            f"enumeration oracle limited to {ORACLE_MAX_VERTICES} vertices (got {g.n})"
        )


def spanning_trees(g: SignedWeightedGraph) -> list[SpanningTree]:
    """Exhaustive, duplicate-free spanning tree enumeration.

    Backtracks over the edge sequence with union-find state and prunes any
    branch whose remaining edges cannot reconnect the current partition.
    Disconnected input yields the empty list.
    """
    _check_oracle_size(g)
    n, edges = g.n, g.edges
    one = Fraction(1)
    if n == 1:
        return [SpanningTree((), one, one)]
    if not is_connected(g):
        return []
    m = len(edges)
    out: list[SpanningTree] = []
    chosen: list[int] = []

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def rec(i: int, parent: list[int], ncomp: int):
        if ncomp == 1:
            pi = one
            pib = one
            for e in chosen:
                w = edges[e][2]
                pi *= w
                if w > 0:
                    pib *= w
            out.append(SpanningTree(tuple(chosen), pi, pib))
            return
        if i == m:
            return
        u, v, _ = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            p2 = parent.copy()
            p2[ru] = rv
            chosen.append(i)
            rec(i + 1, p2, ncomp - 1)
            chosen.pop()
        # exclude edge i only if the rest can still connect everything
        p3 = parent.copy()
        nc = ncomp
        for j in range(i + 1, m):
            a, b, _ = edges[j]
            ra, rb = find(p3, a), find(p3, b)
            if ra != rb:
                p3[ra] = rb
                nc -= 1
                if nc == 1:
                    break
        if nc == 1:
            rec(i + 1, parent, ncomp)

    rec(0, list(range(n)), n)
    return out


def two_forests(
    g: SignedWeightedGraph,
    u_pair: Sequence[int],
    w_pair: Sequence[int],
) -> list[TwoForest]:
    """All spanning 2-forests in which each tree holds exactly one vertex of
    ``u_pair`` and one of ``w_pair`` (the pairs may overlap as vertex sets).

    epsilon is the sign of the matching permutation under the given
    enumeration orders: +1 when u_pair[0] and w_pair[0] share a component.
    """
    _check_oracle_size(g)
    if len(set(u_pair)) != 2 or len(set(w_pair)) != 2:
        raise InputError("u_pair and w_pair must each contain two distinct vertices")
    n, edges = g.n, g.edges
    m = len(edges)
    k = n - 2
    if k < 0 or k > m:
        return []
    if math.comb(m, k) > _ORACLE_MAX_SUBSETS:
        raise InputError(f"2-forest enumeration too large: C({m},{k}) subsets")
    u0, u1 = u_pair
    w0, w1 = w_pair
    uset = {u0, u1}
    wset = {w0, w1}
    out: list[TwoForest] = []
    for subset in itertools.combinations(range(m), k):
        uf = _UnionFind(n)
        ok = True
        for e in subset:
            a, b, _ = edges[e]
            if not uf.union(a, b):
                ok = False
                break
        if not ok:
            continue
        # acyclic with n-2 edges => exactly 2 components
        comp: dict[int, list[int]] = {}
        for v in range(n):
            comp.setdefault(uf.find(v), []).append(v)
        parts = [frozenset(vs) for vs in comp.values()]
        p0, p1 = sorted(parts, key=min)
        if len(uset & p0) != 1 or len(wset & p0) != 1:
            continue
        eps = 1 if (u0 in p0) == (w0 in p0) else -1
        pi = Fraction(1)
        for e in subset:
            pi *= edges[e][2]
        out.append(TwoForest(subset, (p0, p1), eps, pi))
    return out
