"""Per-edge critical thresholds and the l1 sufficient-stability certificate.

Along the i-th axis ray the crossing polynomial is A_empty - A_{e_i} * t, so
omega_i = A_empty / A_{e_i} is the exact magnitude where stability is first
lost on that axis.  Any t with ||t||_1 <= min_i omega_i is a convex
combination of stable axis points, hence certified; the certificate is
sufficient only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .graph import SignedWeightedGraph, component_counts, minor
from .spectral import SpectralIndex, inertia, laplacian, tree_sum


def axis_thresholds(g: SignedWeightedGraph) -> list[Fraction | None]:
    """omega_i = A_empty / A_{e_i} per red edge; None means the threshold is
    infinite (no spanning tree uses red edge i alone, so that axis never
    crosses).  Requires a connected black subgraph."""
    _, c_plus, _ = component_counts(g)
    if c_plus != 1:
        raise InputError("thresholds require a connected black subgraph")
    r = g.red_count
    all_red = set(range(r))
    a_empty = tree_sum(minor(g, set(), all_red))
    out: list[Fraction | None] = []
    for i in range(r):
        a_i = tree_sum(minor(g, {i}, all_red - {i}))
        out.append(a_empty / a_i if a_i != 0 else None)
    return out


@dataclass(frozen=True)
class StabilityReport:
    """Certificate outcome plus an independent exact verification.

    certified: ||t||_1 <= min omega (boundary included).  On the open ball the
    index is (N-1, 1, 0); exactly on the boundary n_zero may be 2, which the
    boundary flag distinguishes.  verified_index is always computed by exact
    inertia, independent of the certificate.
    """

    thresholds: tuple[Fraction | None, ...]
    certified: bool
    boundary: bool
    certificate_margin: Fraction | None  # min omega - ||t||_1; None if min is infinite
    verified_index: SpectralIndex


def certify(g: SignedWeightedGraph, t: Sequence[Fraction]) -> StabilityReport:
    """Check ||t||_1 <= min_i omega_i and verify the spectral index exactly."""
    omegas = axis_thresholds(g)
    if len(t) != len(omegas):
        raise InputError(f"expected {len(omegas)} red magnitudes, got {len(t)}")
    t = [Fraction(x) for x in t]
    if any(x < 0 for x in t):
        raise InputError("red magnitudes must be nonnegative")
    norm1 = sum(t, Fraction(0))
    finite = [w for w in omegas if w is not None]
    min_omega = min(finite) if finite else None
    certified = min_omega is None or norm1 <= min_omega
    boundary = min_omega is not None and norm1 == min_omega
    margin = None if min_omega is None else min_omega - norm1
    verified = inertia(laplacian(g, t))
    return StabilityReport(tuple(omegas), certified, boundary, margin, verified)
