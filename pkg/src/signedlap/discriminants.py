"""Discriminants, level-repulsion geometry, and hyperplane factorization.

For R = 2 the crossing polynomial is A11*x*y - A10*x - A01*y + A00 and its
discriminant Delta = A11*A00 - A01*A10 controls whether the zero set is a
hyperbola (level repulsion, gap > 0) or two axis-parallel lines with a
reachable double crossing (Delta = 0).  Delta has two combinatorial duals: a
signed spanning-2-forest sum squared, and a cycle-basis intersection minor
squared (both asserted on |Delta|; the forest identity's own sign
conventions are not internally consistent).

For R > 2 a wildcard (a 0/1 pattern with two free positions) selects a
4-coefficient sub-polynomial whose 2x2 discriminant must vanish for the zero
set to split into hyperplanes; a specific basis of 2^R - R - 1 wildcards is
sufficient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .crossing import CrossingPolynomial
from .errors import InputError
from .graph import SignedWeightedGraph, minor_with_info, red_subset_is_forest, two_forests
from .spectral import _as_rows, det_rational


def _require_r2(p: CrossingPolynomial):
    if p.red_count != 2:
        raise InputError(f"operation requires exactly 2 red edges, got {p.red_count}")


def discriminant(p: CrossingPolynomial) -> Fraction:
    """Delta = A11*A00 - A01*A10 (R = 2)."""
    _require_r2(p)
    return p.coeffs[3] * p.coeffs[0] - p.coeffs[1] * p.coeffs[2]


def gap(p: CrossingPolynomial) -> float | None:
    """Minimum branch distance surrogate sqrt(2|Delta|)/A11.

    0 when Delta = 0; None (undefined) when A11 = 0.  Computed through an
    exact ratio so huge coefficients cannot overflow the intermediate.
    """
    _require_r2(p)
    a11 = p.coeffs[3]
    if a11 == 0:
        return None
    d = discriminant(p)
    if d == 0:
        return 0.0
    return math.sqrt(float(2 * abs(d) / (a11 * a11)))


def degenerate_point(p: CrossingPolynomial) -> tuple[Fraction, Fraction] | None:
    """The unique double-crossing location (A01/A11, A10/A11) when Delta = 0
    and A11 > 0; None otherwise."""
    _require_r2(p)
    a11 = p.coeffs[3]
    if a11 == 0 or discriminant(p) != 0:
        return None
    ax, ay = p.coeffs[1], p.coeffs[2]  # coefficients of x (red 0) and y (red 1)
    return (ay / a11, ax / a11)


def _forest_pairs(g: SignedWeightedGraph) -> tuple[tuple[int, int], tuple[int, int]]:
    """Endpoint enumerations (U, W) for the two red edges.

    Disjoint edges: each pair sorted ascending.  Shared vertex: the shared
    vertex leads both pairs.  Only the sign of the forest sum depends on this.
    """
    reds = g.red_edges
    (u1, v1, _), (u2, v2, _) = reds
    shared = {u1, v1} & {u2, v2}
    if shared:
        s = min(shared)
        o1 = u1 + v1 - s
        o2 = u2 + v2 - s
        return (s, o1), (s, o2)
    return (u1, v1), (u2, v2)


def forest_sum(g: SignedWeightedGraph) -> Fraction:
    """Signed spanning-2-forest sum sigma for a graph with two red edges.

    Each qualifying forest separates the endpoints of both red edges, so its
    weight product ranges over black edges only.  Contract: sigma^2 = |Delta|.
    The global sign depends on the endpoint enumeration order.
    """
    if g.red_count != 2:
        raise InputError(f"forest sum requires exactly 2 red edges, got {g.red_count}")
    u_pair, w_pair = _forest_pairs(g)
    total = Fraction(0)
    for f in two_forests(g, u_pair, w_pair):
        total += f.epsilon * f.pi
    return total


def laplacian_minor(m, rows_removed: Sequence[int], cols_removed: Sequence[int]) -> Fraction:
    """Exact determinant of the matrix with the given rows and columns removed."""
    rows = _as_rows(m)
    n = len(rows)
    rset, cset = set(rows_removed), set(cols_removed)
    if len(rset) != len(rows_removed) or len(cset) != len(cols_removed):
        raise InputError("removed index sets contain duplicates")
    if len(rset) != len(cset):
        raise InputError("must remove equally many rows and columns")
    for i in rset | cset:
        if not 0 <= i < n:
            raise InputError(f"index {i} out of range 0..{n - 1}")
    keep_r = [i for i in range(n) if i not in rset]
    keep_c = [j for j in range(n) if j not in cset]
    return det_rational([[rows[i][j] for j in keep_c] for i in keep_r])


def dodgson_identity_holds(m, i: int, j: int, k: int, l: int) -> bool:
    """Check |M||M_{ij,kl}| - |M_{i,k}||M_{j,l}| = -|M_{i,l}||M_{j,k}| exactly.

    Rows i != j, columns k != l, 0-based.  The condensation identity behind
    the discriminant/minor calculus; exposed as an identity oracle.
    """
    rows = _as_rows(m)
    n = len(rows)
    if i == j or k == l:
        raise InputError("need two distinct rows and two distinct columns")
    for idx in (i, j, k, l):
        if not 0 <= idx < n:
            raise InputError(f"index {idx} out of range 0..{n - 1}")
    i, j = sorted((i, j))  # the identity is stated for ordered index pairs
    k, l = sorted((k, l))
    full = det_rational(rows)
    inner = laplacian_minor(rows, [i, j], [k, l])
    lhs = full * inner - laplacian_minor(rows, [i], [k]) * laplacian_minor(rows, [j], [l])
    rhs = -laplacian_minor(rows, [i], [l]) * laplacian_minor(rows, [j], [k])
    return lhs == rhs


# ---------------------------------------------------------------------------
# Cycle-basis dual of the discriminant


def cycle_basis_minor(g: SignedWeightedGraph) -> Fraction | None:
    """Cycle-intersection minor whose square is |Delta| (unit black weights).

    Builds a cycle basis from fundamental cycles of a spanning tree of the
    graph minus both red edges, so the last two basis cycles are the unique
    ones through each red edge.  Forms the cycle Gram matrix G = F F^T and
    returns the minor removing the last row and second-to-last column.
    None (undefined) when removing the red edges disconnects the graph or the
    co-rank is < 2.
    """
    if g.red_count != 2:
        raise InputError(f"cycle minor requires exactly 2 red edges, got {g.red_count}")
    if any(w != 1 for _, _, w in g.black_edges):
        raise InputError("cycle minor requires unit black weights")
    n = g.n
    m = len(g.edges)
    corank = m - n + 1
    if corank < 2:
        return None
    red_pos = list(g.red_indices)
    black_pos = [i for i in range(m) if i not in red_pos]
    # spanning tree of the graph without the red edges
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for pos in black_pos:
        u, v, _ = g.edges[pos]
        adj[u].append((v, pos))
        adj[v].append((u, pos))
    parent = {0: (None, None)}
    order = [0]
    for v in order:
        for w, pos in adj[v]:
            if w not in parent:
                parent[w] = (v, pos)
                order.append(w)
    if len(parent) != n:
        return None  # g minus the red edges is disconnected
    depth = {0: 0}
    for v in order[1:]:
        depth[v] = depth[parent[v][0]] + 1
    tree_pos = {parent[v][1] for v in parent if parent[v][1] is not None}

    def cycle_vector(pos: int) -> list[int]:
        """Fundamental cycle of chord ``pos``: traverse the chord from its
        lower endpoint, then the tree path back; +-1 per edge orientation
        (every edge is stored tail < head)."""
        vec = [0] * m
        u, v, _ = g.edges[pos]
        vec[pos] = 1  # traversed u -> v, matching its orientation
        a, b = v, u  # walk the tree path v -> u
        steps: list[tuple[int, int, int]] = []  # (from, to, edge pos)
        while a != b:
            if depth[a] >= depth[b]:
                pa, pe = parent[a]
                steps.append((a, pa, pe))
                a = pa
            else:
                pb, pe = parent[b]
                steps.insert(0, (pb, b, pe))
                b = pb
        for frm, to, pe in steps:
            eu, ev, _ = g.edges[pe]
            vec[pe] += 1 if (frm, to) == (eu, ev) else -1
        return vec

    chords = [pos for pos in black_pos if pos not in tree_pos]
    basis = [cycle_vector(pos) for pos in chords]
    basis.append(cycle_vector(red_pos[0]))
    basis.append(cycle_vector(red_pos[1]))
    c = len(basis)
    gram = [[sum(a * b for a, b in zip(basis[i], basis[j])) for j in range(c)] for i in range(c)]
    sub = [[gram[i][j] for j in range(c) if j != c - 2] for i in range(c) if i != c - 1]
    return det_rational(sub)


# ---------------------------------------------------------------------------
# Wildcards and full factorization


@dataclass(frozen=True)
class Wildcard:
    """Length-R pattern over {0, 1, free} with exactly two free positions.

    Serialized as a string over {0, 1, *}, read left to right as red edges
    0..R-1.  Picks the 4-coefficient sub-polynomial over the masks
    {b, b+e_i, b+e_j, b+e_i+e_j} where b is the pattern with frees zeroed.
    """

    r: int
    i: int  # first free position (0-based)
    j: int  # second free position, i < j
    bits: int  # mask over the fixed positions

    def __post_init__(self):
        if not (0 <= self.i < self.j < self.r):
            raise InputError(f"free positions ({self.i}, {self.j}) invalid for length {self.r}")
        if self.bits & (1 << self.i) or self.bits & (1 << self.j):
            raise InputError("fixed bits overlap the free positions")

    @classmethod
    def from_string(cls, s: str) -> "Wildcard":
        frees = [k for k, ch in enumerate(s) if ch == "*"]
        if len(frees) != 2 or any(ch not in "01*" for ch in s):
            raise InputError(f"wildcard {s!r} must be over 0/1/* with exactly two *")
        bits = 0
        for k, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << k
        return cls(len(s), frees[0], frees[1], bits)

    def to_string(self) -> str:
        out = []
        for k in range(self.r):
            if k in (self.i, self.j):
                out.append("*")
            else:
                out.append("1" if self.bits >> k & 1 else "0")
        return "".join(out)

    def subset_masks(self) -> tuple[int, int, int, int]:
        """(b, b+e_i, b+e_j, b+e_i+e_j)."""
        b = self.bits
        ei, ej = 1 << self.i, 1 << self.j
        return b, b | ei, b | ej, b | ei | ej


def wildcard_basis(r: int) -> list[Wildcard]:
    """The 2^r - r - 1 wildcards whose vanishing discriminants certify full
    hyperplane factorization: both free positions anywhere, every fixed bit
    before the second free position zero, bits after it unconstrained."""
    if r < 2:
        raise InputError(f"wildcards need at least 2 red edges, got {r}")
    out = []
    for j in range(1, r):
        for i in range(j):
            tail = list(range(j + 1, r))
            for choice in itertools.product((0, 1), repeat=len(tail)):
                bits = 0
                for pos, bit in zip(tail, choice):
                    if bit:
                        bits |= 1 << pos
                out.append(Wildcard(r, i, j, bits))
    return out


def wildcard_discriminant(p: CrossingPolynomial, w: Wildcard) -> Fraction:
    """Delta_w = A_{b+ei+ej}*A_b - A_{b+ei}*A_{b+ej}."""
    if w.r != p.red_count:
        raise InputError(f"wildcard length {w.r} != red count {p.red_count}")
    b, bi, bj, bij = w.subset_masks()
    return p.coeffs[bij] * p.coeffs[b] - p.coeffs[bi] * p.coeffs[bj]


@dataclass(frozen=True)
class Factorization:
    """M(t) = alpha * prod_i (1 - C_i * t_i); crossing hyperplanes at
    t_i = 1/C_i for C_i > 0."""

    alpha: Fraction
    c: tuple[Fraction, ...]


def factorize(p: CrossingPolynomial) -> Factorization | None:
    """Full hyperplane factorization of the crossing polynomial, or None.

    Tests every basis wildcard discriminant, extracts alpha = A_empty and
    C_i = A_{e_i}/A_empty, then verifies by re-expansion that every
    coefficient is reproduced exactly; the verification keeps the operation
    sound independent of the sufficiency argument.
    """
    a0 = p.coeffs[0]
    if a0 == 0:
        raise InputError("factorization requires a connected black subgraph (A_empty > 0)")
    r = p.red_count
    if r >= 2:
        for w in wildcard_basis(r):
            if wildcard_discriminant(p, w) != 0:
                return None
    c = tuple(p.coeffs[1 << i] / a0 for i in range(r))
    for mask in range(1 << r):
        expect = a0
        for i in range(r):
            if mask >> i & 1:
                expect *= c[i]
        if p.coeffs[mask] != expect:
            return None
    return Factorization(a0, c)


def wildcard_forest_sum(g: SignedWeightedGraph, w: Wildcard) -> Fraction | None:
    """Forest-sum dual of a wildcard discriminant.

    Builds the derived graph: red edges at fixed 1-positions contracted, at
    fixed 0-positions deleted, the two free-position reds kept.  Returns the
    signed 2-forest sum there; contract: result^2 = |Delta_w|.  None
    (undefined) when a free red edge collapses to a loop or is merged with a
    parallel edge by the contraction.
    """
    reds = g.red_indices
    if w.r != len(reds):
        raise InputError(f"wildcard length {w.r} != red count {len(reds)}")
    contract = {k for k in range(w.r) if k not in (w.i, w.j) and w.bits >> k & 1}
    delete = {k for k in range(w.r) if k not in (w.i, w.j) and not w.bits >> k & 1}
    if not red_subset_is_forest(g, contract):
        return None  # every coefficient under this wildcard is zero
    info = minor_with_info(g, contract, delete)
    ni = info.red_map.get(w.i)
    nj = info.red_map.get(w.j)
    if ni is None or nj is None:
        return None
    derived = info.graph
    new_red_pos = derived.red_indices
    if {new_red_pos[ni], new_red_pos[nj]} & set(info.merged_positions):
        return None
    return forest_sum(derived)
