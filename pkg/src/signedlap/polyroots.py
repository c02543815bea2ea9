"""Exact univariate polynomial arithmetic and positive real root isolation.

Polynomials are dense lists of Fractions, lowest degree first.  The driver
``positive_roots`` returns every positive real root with its multiplicity:
multiplicities via Yun's square-free decomposition, isolation via Sturm
sequences, refinement by exact bisection, and rational roots recognized by
probing the simplest rational (smallest denominator) inside the isolating
interval and verifying exactly.  The probe is sound always and complete for
root denominators up to ~1e14.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InputError

Poly = list[Fraction]

_REPORT_WIDTH = Fraction(1, 10**12)
_PROBE_WIDTH = Fraction(1, 10**30)


def strip(p) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    """Degree of a stripped polynomial; -1 for the zero polynomial."""
    return len(p) - 1


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return [c * k for k, c in enumerate(p)][1:]


def multiply(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def divmod_exact(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Polynomial division with remainder over the rationals."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k] / lead
        if c == 0:
            continue
        quo[k - dq] = c
        for j in range(dq + 1):
            rem[k - dq + j] -= c * q[j]
    return strip(quo), strip(rem)


def _primitive_keep_sign(p: Poly) -> Poly:
    """Scale by a positive rational to integer, content-free coefficients.

    Positive scaling only, so sign patterns (and Sturm variation counts) are
    preserved exactly."""
    p = strip(p)
    if not p:
        return p
    mult = lcm(*(c.denominator for c in p))
    ints = [int(c * mult) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [Fraction(c // g) for c in ints]


def _primitive(p: Poly) -> Poly:
    """Like _primitive_keep_sign but also forces a positive leading
    coefficient (canonical form for gcds and square-free factors)."""
    p = _primitive_keep_sign(p)
    if p and p[-1] < 0:
        p = [-c for c in p]
    return p


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive gcd via the Euclidean algorithm (remainders kept primitive)."""
    a, b = _primitive(p), _primitive(q)
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, _primitive(r)
    return a


def square_free_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: [(factor, multiplicity), ...] with square-free,
    pairwise-coprime factors (constant factors dropped)."""
    p = strip(p)
    if degree(p) < 1:
        return []
    dp = derivative(p)
    a0 = poly_gcd(p, dp)
    b, _ = divmod_exact(p, a0)
    c, _ = divmod_exact(dp, a0)
    d = [x - y for x, y in _padded(c, derivative(b))]
    out: list[tuple[Poly, int]] = []
    i = 1
    while degree(b) > 0:
        ai = poly_gcd(b, strip(d))
        if degree(ai) > 0:
            out.append((_primitive(ai), i))
        b, _ = divmod_exact(b, ai)
        cnext, _ = divmod_exact(strip(d), ai)
        d = [x - y for x, y in _padded(cnext, derivative(b))]
        i += 1
    return out


def _padded(p: Poly, q: Poly):
    n = max(len(p), len(q))
    p = p + [Fraction(0)] * (n - len(p))
    q = q + [Fraction(0)] * (n - len(q))
    return zip(p, q)


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [_primitive_keep_sign(p), _primitive_keep_sign(derivative(p))]
    while seq[-1]:
        _, r = divmod_exact(seq[-2], seq[-1])
        r = _primitive_keep_sign(r)
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _variations_at(seq: list[Poly], x: Fraction) -> int:
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_halfopen(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] for a square-free polynomial."""
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def cauchy_bound(p: Poly) -> Fraction:
    p = strip(p)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p) / lead


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational in [lo, hi], 0 < lo <= hi.

    Classic continued-fraction walk: if an integer lies in the interval take
    the smallest one, otherwise recurse on the reciprocal fractional parts.
    """
    if not (0 < lo <= hi):
        raise InputError("simplest_between requires 0 < lo <= hi")
    whole = lo.numerator // lo.denominator
    frac_lo = lo - whole
    if frac_lo == 0:
        return lo
    if whole + 1 <= hi:
        return Fraction(whole + 1)
    return whole + 1 / simplest_between(1 / (hi - whole), 1 / frac_lo)


@dataclass(frozen=True)
class RootRecord:
    """One positive real root.

    value is the exact Fraction when the root is rational, else None with
    (lo, hi) an isolating interval of width <= 1e-12.  midpoint is a float
    convenience view.
    """

    value: Fraction | None
    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def midpoint(self) -> float:
        if self.value is not None:
            return float(self.value)
        return float((self.lo + self.hi) / 2)


def _isolate_positive(h: Poly) -> tuple[Poly, list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Isolating intervals for the positive roots of a square-free h.

    Returns (h_residual, exact_roots_found_by_midpoint_hits, intervals).
    Exact midpoint hits are deflated out and isolation restarts; the
    intervals refer to h_residual, each (lo, hi] containing exactly one of
    its roots with no root at either endpoint.
    """
    h = _primitive(h)
    exact: list[Fraction] = []
    while True:
        if degree(h) < 1:
            return h, exact, []
        seq = sturm_sequence(h)
        bound = cauchy_bound(h)
        total = count_roots_halfopen(seq, Fraction(0), bound)
        intervals: list[tuple[Fraction, Fraction]] = []
        stack = [(Fraction(0), bound, total)]
        restart = False
        while stack:
            lo, hi, cnt = stack.pop()
            if cnt == 0:
                continue
            if cnt == 1:
                intervals.append((lo, hi))
                continue
            mid = (lo + hi) / 2
            if evaluate(h, mid) == 0:
                exact.append(mid)
                h, _ = divmod_exact(h, [-mid, Fraction(1)])
                h = _primitive(h)
                restart = True
                break
            left = count_roots_halfopen(seq, lo, mid)
            stack.append((lo, mid, left))
            stack.append((mid, hi, cnt - left))
        if not restart:
            return h, exact, intervals


def _refine(h: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval by sign bisection to the given width.

    h(lo) and h(hi) have opposite signs on entry (single root, no endpoint
    roots); an exact midpoint hit collapses the interval.
    """
    flo = evaluate(h, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = evaluate(h, mid)
        if fmid == 0:
            return mid, mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


def _probe_simplest(lo: Fraction, hi: Fraction) -> Fraction | None:
    """Simplest rational in (lo, hi], tolerating lo == 0."""
    if lo > 0:
        return simplest_between(lo, hi)
    if hi > 0:
        q = -((-hi.denominator) // hi.numerator)  # ceil(1/hi)
        return Fraction(1, q)
    return None


def positive_roots(p) -> list[RootRecord]:
    """All positive real roots of p with multiplicities, sorted ascending."""
    p = strip(p)
    if not p:
        raise InputError("zero polynomial has no well-defined root set")
    while p and p[0] == 0:  # roots at 0 are not positive roots
        p = p[1:]
    records: list[RootRecord] = []
    for factor, mult in square_free_decomposition(p):
        residual, exact, intervals = _isolate_positive(factor)
        for r in exact:
            records.append(RootRecord(r, r, r, mult))
        for lo, hi in intervals:
            lo, hi = _refine(residual, lo, hi, _REPORT_WIDTH)
            if lo == hi:
                records.append(RootRecord(lo, lo, lo, mult))
                continue
            probe = _probe_simplest(lo, hi)
            if probe is not None and evaluate(residual, probe) == 0:
                records.append(RootRecord(probe, probe, probe, mult))
                continue
            lo2, hi2 = _refine(residual, lo, hi, _PROBE_WIDTH)
            if lo2 == hi2:
                records.append(RootRecord(lo2, lo2, lo2, mult))
                continue
            probe = _probe_simplest(lo2, hi2)
            if probe is not None and evaluate(residual, probe) == 0:
                records.append(RootRecord(probe, probe, probe, mult))
            else:
                records.append(RootRecord(None, lo2, hi2, mult))
    records.sort(key=lambda r: r.value if r.value is not None else (r.lo + r.hi) / 2)
    return records
