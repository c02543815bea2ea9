"""Monte Carlo ensembles: uniform random graphs with two red edges.

Samples G(N,M) (or optionally G(N,p)) graphs, makes two uniformly chosen
edges red, and records the discriminant, the level-repulsion gap, and a
red-edge geometry class per sample.  Everything is driven by per-sample seeds
derived from (master_seed, M, sample_index), so output is byte-identical
regardless of worker count or execution order.

delta_zero is decided by exact integer arithmetic (the four coefficients are
integer tree counts), never by float thresholding.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import InputError
from .graph import SignedWeightedGraph

_HIST_LO = -10.0
_HIST_HI = 10.0
_HIST_BINS = 200  # 0.1-wide bins in log10(gap)


@dataclass(frozen=True)
class EnsembleConfig:
    n: int
    m_values: tuple[int, ...]
    samples_per_m: int
    master_seed: int
    model: str = "gnm"  # "gnm" or "gnp"
    p: float | None = None

    def __post_init__(self):
        if self.n < 2:
            raise InputError("need at least 2 vertices")
        if self.samples_per_m < 1:
            raise InputError("samples_per_m must be positive")
        if self.model not in ("gnm", "gnp"):
            raise InputError(f"unknown model {self.model!r}")
        if self.model == "gnp" and not (self.p and 0 < self.p <= 1):
            raise InputError("gnp model needs 0 < p <= 1")
        total = self.n * (self.n - 1) // 2
        for m in self.m_values:
            if self.model == "gnm" and not 2 <= m <= total:
                raise InputError(f"M={m} outside 2..{total} for N={self.n}")


def config_from_dict(d: dict) -> EnsembleConfig:
    """Accepts {"N": .., "M": [..] or int, "samples": .., "seed": ..,
    "model": "gnm"|"gnp", "p": ..}."""
    if not isinstance(d, dict):
        raise InputError("ensemble config must be a JSON object")
    try:
        n = int(d["N"])
        m_raw = d["M"]
        samples = int(d["samples"])
        seed = int(d["seed"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"ensemble config needs integer N, M, samples, seed: {exc}") from exc
    m_values = tuple(int(m) for m in (m_raw if isinstance(m_raw, list) else [m_raw]))
    model = d.get("model", "gnm")
    p = float(d["p"]) if "p" in d else None
    return EnsembleConfig(n, m_values, samples, seed, model, p)


def sample_seed(master_seed: int, m: int, index: int) -> int:
    """Stable 64-bit per-sample seed, independent of worker layout."""
    digest = hashlib.blake2b(
        f"{master_seed}:{m}:{index}".encode(), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _sample_pairs(cfg: EnsembleConfig, m: int, seed: int):
    """(sorted edge pairs, index of red edge 1, index of red edge 2)."""
    rng = random.Random(seed)
    pairs = _all_pairs(cfg.n)
    if cfg.model == "gnm":
        chosen = sorted(rng.sample(range(len(pairs)), m))
    else:
        while True:
            chosen = [i for i in range(len(pairs)) if rng.random() < cfg.p]
            if len(chosen) >= 2:
                break
    edges = [pairs[i] for i in chosen]
    r1, r2 = sorted(rng.sample(range(len(edges)), 2))
    return edges, r1, r2


def sample_graph(n: int, m: int, seed: int) -> SignedWeightedGraph:
    """One G(N,M) draw with two red edges: black weights 1, red weights -1."""
    cfg = EnsembleConfig(n, (m,), 1, 0)
    edges, r1, r2 = _sample_pairs(cfg, m, seed)
    w = [Fraction(1)] * len(edges)
    w[r1] = Fraction(-1)
    w[r2] = Fraction(-1)
    return SignedWeightedGraph(n, tuple((u, v, wi) for (u, v), wi in zip(edges, w)))


# ---------------------------------------------------------------------------
# Integer coefficient pipeline (unit black weights, weights -1 on reds)


def _tree_count(n: int, pairs, unions) -> int:
    """Spanning-tree count of the multigraph on n vertices given by ``pairs``
    after identifying the vertex pairs in ``unions``: exact cofactor of the
    contracted positive Laplacian."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        parent[find(a)] = find(b)
    roots = sorted({find(v) for v in range(n)})
    cls = {root: i for i, root in enumerate(roots)}
    k = len(roots)
    if k == 1:
        return 1
    q = [[0] * k for _ in range(k)]
    for u, v in pairs:
        a, b = cls[find(u)], cls[find(v)]
        if a == b:
            continue
        q[a][b] -= 1
        q[b][a] -= 1
        q[a][a] += 1
        q[b][b] += 1
    sub = [row[1:] for row in q[1:]]
    return _kernels.det_int(sub)


def _coefficients_r2(n: int, black_pairs, red1, red2) -> tuple[int, int, int, int]:
    """(A_empty, A_x, A_y, A_xy) for two red edges over unit black weights."""
    a00 = _tree_count(n, black_pairs, ())
    ax = _tree_count(n, black_pairs, (red1,))
    ay = _tree_count(n, black_pairs, (red2,))
    axy = _tree_count(n, black_pairs, (red1, red2))
    return a00, ax, ay, axy


def _log10_int(x: int) -> float:
    if x.bit_length() <= 900:
        return math.log10(x)
    shift = x.bit_length() - 64
    return math.log10(x >> shift) + shift * math.log10(2.0)


def _gap_and_log(delta: int, axy: int) -> tuple[float, float]:
    """gap = sqrt(2|delta|)/axy and log10(gap); exact ratio first, bit-length
    logarithms when the ratio leaves float range."""
    num = 2 * abs(delta)
    den = axy * axy
    try:
        ratio = float(Fraction(num, den))
    except OverflowError:
        ratio = math.inf
    if ratio != 0.0 and math.isfinite(ratio):
        g = math.sqrt(ratio)
        return g, math.log10(g)
    log10 = 0.5 * (_log10_int(num) - _log10_int(den))
    return 10.0 ** log10, log10


@dataclass(frozen=True)
class EnsembleRecord:
    sample_id: int
    n: int
    m: int
    red1: tuple[int, int]
    red2: tuple[int, int]
    class_label: str
    gplus_connected: bool
    delta_zero: bool
    gap: float | None       # None = undefined (full graph disconnected, A_xy = 0)
    log10_gap: float | None  # -inf when gap == 0; None when gap undefined


def _distance_class(n: int, black_pairs, red1, red2) -> str:
    adj = np.zeros((n, n), dtype=np.uint8)
    for u, v in black_pairs:
        adj[u, v] = 1
        adj[v, u] = 1
    symbols = []
    for x in red1:
        dist = _kernels.bfs_distances(adj, x)
        for y in red2:
            d = int(dist[y])
            symbols.append("+" if d < 0 or d >= 10 else str(d))
    symbols.sort(key=lambda s: 10 if s == "+" else int(s))
    return "".join(symbols)


def classify(g: SignedWeightedGraph) -> str:
    """Red-pair geometry class of a 2-red-edge graph.

    "disconnected_plus" when the black subgraph is disconnected (takes
    precedence); "adj" when the red edges share a vertex; otherwise the four
    black-graph distances between red endpoints, clamped to '+' at >= 10,
    sorted ascending and concatenated.
    """
    if g.red_count != 2:
        raise InputError(f"classification requires exactly 2 red edges, got {g.red_count}")
    black_pairs = [(u, v) for u, v, _ in g.black_edges]
    adj = np.zeros((g.n, g.n), dtype=np.uint8)
    for u, v in black_pairs:
        adj[u, v] = 1
        adj[v, u] = 1
    if _kernels.component_count(adj) != 1:
        return "disconnected_plus"
    (u1, v1, _), (u2, v2, _) = g.red_edges
    if {u1, v1} & {u2, v2}:
        return "adj"
    return _distance_class(g.n, black_pairs, (u1, v1), (u2, v2))


def compute_record(cfg: EnsembleConfig, m: int, index: int) -> EnsembleRecord:
    """Full per-sample pipeline: sample, classify, exact discriminant, gap."""
    seed = sample_seed(cfg.master_seed, m, index)
    edges, r1, r2 = _sample_pairs(cfg, m, seed)
    red1, red2 = edges[r1], edges[r2]
    black_pairs = [e for i, e in enumerate(edges) if i not in (r1, r2)]
    n = cfg.n
    a00, ax, ay, axy = _coefficients_r2(n, black_pairs, red1, red2)
    delta = axy * a00 - ax * ay
    gplus_connected = a00 != 0
    if not gplus_connected:
        label = "disconnected_plus"
    elif set(red1) & set(red2):
        label = "adj"
    else:
        label = _distance_class(n, black_pairs, red1, red2)
    if axy == 0:
        gap_val: float | None = None
        log_val: float | None = None
    elif delta == 0:
        gap_val, log_val = 0.0, -math.inf
    else:
        gap_val, log_val = _gap_and_log(delta, axy)
    return EnsembleRecord(
        sample_id=index,
        n=n,
        m=len(edges),
        red1=red1,
        red2=red2,
        class_label=label,
        gplus_connected=gplus_connected,
        delta_zero=delta == 0,
        gap=gap_val,
        log10_gap=log_val,
    )


def generate_records(cfg: EnsembleConfig, threads: int = 1) -> list[EnsembleRecord]:
    """All records in deterministic (M, sample_id) order.

    Threads only change wall time: per-sample seeding makes the result
    independent of scheduling.
    """
    tasks = [(m, i) for m in cfg.m_values for i in range(cfg.samples_per_m)]
    if threads <= 1:
        return [compute_record(cfg, m, i) for m, i in tasks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda mi: compute_record(cfg, *mi), tasks, chunksize=64))


# ---------------------------------------------------------------------------
# CSV / summary output

CSV_HEADER = (
    "sample_id,N,M,red1_u,red1_v,red2_u,red2_v,class,"
    "gplus_connected,delta_zero,gap,log10_gap"
)


def _fmt_float(x: float | None) -> str:
    if x is None:
        return ""
    if x == -math.inf:
        return "-inf"
    return f"{x:.17g}"


def record_to_csv_line(rec: EnsembleRecord) -> str:
    return ",".join(
        [
            str(rec.sample_id),
            str(rec.n),
            str(rec.m),
            str(rec.red1[0]),
            str(rec.red1[1]),
            str(rec.red2[0]),
            str(rec.red2[1]),
            rec.class_label,
            "true" if rec.gplus_connected else "false",
            "true" if rec.delta_zero else "false",
            _fmt_float(rec.gap),
            _fmt_float(rec.log10_gap),
        ]
    )


def write_csv(records, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for rec in records:
            fh.write(record_to_csv_line(rec) + "\n")


def _hist_bin(log_gap: float) -> int:
    if not math.isfinite(log_gap):
        return 0 if log_gap < 0 else _HIST_BINS - 1
    b = int(math.floor((log_gap - _HIST_LO) / 0.1))
    return min(max(b, 0), _HIST_BINS - 1)


def summarize(records) -> dict:
    """Per-M summary: disconnection/degeneracy probabilities, conditional
    log10-gap moments, and per-class histograms (0.1-wide bins on [-10, 10],
    zero gaps binned at -10, partitioning the defined-gap histogram).
    """
    records = list(records)
    if not records:
        raise InputError("cannot summarize an empty record set")
    by_m: dict[int, list[EnsembleRecord]] = {}
    for rec in records:
        by_m.setdefault(rec.m, []).append(rec)
    per_m = {}
    for m in sorted(by_m):
        recs = by_m[m]
        total = len(recs)
        n_disc = sum(1 for r in recs if not r.gplus_connected)
        connected = [r for r in recs if r.gplus_connected]
        n_dz = sum(1 for r in connected if r.delta_zero)
        cond = [r.log10_gap for r in connected if not r.delta_zero]
        hist: dict[str, list[int]] = {"all": [0] * _HIST_BINS}
        for r in recs:
            if r.log10_gap is None:
                continue
            b = _hist_bin(r.log10_gap)
            hist["all"][b] += 1
            hist.setdefault(r.class_label, [0] * _HIST_BINS)[b] += 1
        mean = sum(cond) / len(cond) if cond else None
        std = math.sqrt(sum((x - mean) ** 2 for x in cond) / len(cond)) if cond else None
        entry = {
            "samples": total,
            "p_gplus_disconnected": n_disc / total,
            "p_delta_zero_given_connected": (n_dz / len(connected)) if connected else None,
            "log10_gap_mean": mean,
            "log10_gap_std": std,
            "histograms": {k: hist[k] for k in sorted(hist)},
        }
        per_m[str(m)] = entry
    return {"per_m": per_m}


def write_summary(summary: dict, path: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
