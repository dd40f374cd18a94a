"""Structural encodings of rooted subgraphs.

For a rooted tuple the encoding holds three sparse histograms computed on
the extracted subgraph: node degrees, each root's hop distances, and the
edge labels formed by concatenating both endpoints' distances to the
roots. Effective-resistance statistics per root are optional.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from math import isclose
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ArgumentError, UnsupportedError
from .graph import UNREACHABLE, Graph
from .subgraph import RootedSubgraph, enumerate_tuples, rooted_subgraph

EdgeLabel = tuple  # (d(a,u), d(a,v), d(b,u), d(b,v)) after canonicalization

ROUND_DIGITS = 10


def canonical_label(pair_a: Sequence[int], pair_b: Sequence[int]) -> EdgeLabel:
    """Concatenate two endpoint distance pairs, lexicographically smaller first."""
    a, b = tuple(pair_a), tuple(pair_b)
    return a + b if a <= b else b + a


def swap_label(label: EdgeLabel) -> EdgeLabel:
    """Label of the same edge after exchanging the two roots."""
    p, q, r, s = label
    return canonical_label((q, p), (s, r))


@dataclass(frozen=True)
class EncodingConfig:
    degree: bool = True
    node_dist: bool = True
    edge_dist: bool = True
    resistance: bool = False

    def __post_init__(self):
        if not (self.degree or self.node_dist or self.edge_dist or self.resistance):
            raise ArgumentError("encoding config selects no encoding")

    @classmethod
    def from_distance(cls, distance: str) -> "EncodingConfig":
        """Map the CLI ``--distance`` choice to a selection."""
        if distance == "spd":
            return cls()
        if distance == "resistance":
            return cls(node_dist=False, edge_dist=False, resistance=True)
        if distance == "both":
            return cls(resistance=True)
        raise ArgumentError(f"unknown distance kind {distance!r}")

    def for_arity(self, k: int) -> "EncodingConfig":
        """Drop the edge-label histogram when it is undefined (k != 2)."""
        if k == 2 or not self.edge_dist:
            return self
        return EncodingConfig(self.degree, self.node_dist, False, self.resistance)


@dataclass(frozen=True)
class ResistanceStats:
    minimum: float | None
    maximum: float | None
    total: float
    mean: float | None
    component_size: int
    excluded: int
    degraded: bool = False

    def as_tuple(self):
        return (self.minimum, self.maximum, self.total, self.mean, self.component_size, self.excluded, self.degraded)


@dataclass(frozen=True)
class StructuralEncoding:
    hop: int
    tuple_arity: int
    degree_hist: Mapping[int, int] | None = None
    root_dist_hists: tuple[Mapping[int, int], ...] | None = None
    edge_label_hist: Mapping[EdgeLabel, int] | None = None
    resistance_stats: tuple[ResistanceStats, ...] | None = None

    def canonical_key(self) -> tuple:
        """Hashable, order-independent form; equal iff the encodings are equal."""
        def items(h):
            return None if h is None else tuple(sorted(h.items()))

        return (
            self.hop,
            self.tuple_arity,
            items(self.degree_hist),
            None if self.root_dist_hists is None else tuple(items(h) for h in self.root_dist_hists),
            items(self.edge_label_hist),
            None if self.resistance_stats is None else tuple(s.as_tuple() for s in self.resistance_stats),
        )

    def __eq__(self, other):
        if not isinstance(other, StructuralEncoding):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def to_record(self, roots: Sequence[int] | None = None) -> dict:
        rec: dict = {}
        if roots is not None:
            rec["tuple"] = list(roots)
        rec["h"] = self.hop
        if self.degree_hist is not None:
            rec["degree"] = [[d, c] for d, c in sorted(self.degree_hist.items())]
        if self.root_dist_hists is not None:
            rec["node_dist"] = [[[d, c] for d, c in sorted(h.items())] for h in self.root_dist_hists]
        if self.edge_label_hist is not None:
            rec["edge_dist"] = [[list(lab), c] for lab, c in sorted(self.edge_label_hist.items())]
        if self.resistance_stats is not None:
            rec["resistance"] = [
                {
                    "min": s.minimum,
                    "max": s.maximum,
                    "sum": s.total,
                    "mean": s.mean,
                    "component_size": s.component_size,
                    "excluded": s.excluded,
                    "degraded": s.degraded,
                }
                for s in self.resistance_stats
            ]
        return rec

    def serialize(self, roots: Sequence[int] | None = None) -> str:
        return json.dumps(self.to_record(roots), separators=(",", ":"), sort_keys=True)

    def swap_roots(self) -> "StructuralEncoding":
        """The encoding of the same subgraph with the two roots exchanged."""
        if self.tuple_arity != 2:
            raise UnsupportedError("root swap needs a 2-tuple")
        return StructuralEncoding(
            self.hop,
            2,
            self.degree_hist,
            None if self.root_dist_hists is None else self.root_dist_hists[::-1],
            None
            if self.edge_label_hist is None
            else dict(Counter({swap_label(k): v for k, v in self.edge_label_hist.items()})),
            None if self.resistance_stats is None else self.resistance_stats[::-1],
        )


def degree_encoding(sub: RootedSubgraph) -> dict[int, int]:
    return dict(Counter(len(a) for a in sub.local.adjacency))


def node_distance_encoding(sub: RootedSubgraph) -> tuple[dict[int, int], ...]:
    return tuple(dict(Counter(dist)) for dist in sub.root_distances)


def edge_distance_encoding(sub: RootedSubgraph) -> dict[EdgeLabel, int]:
    if sub.arity != 2:
        raise UnsupportedError(f"edge-level distance labels need a 2-tuple, got arity {sub.arity}")
    du, dv = sub.root_distances
    hist: Counter = Counter()
    for a, b in sub.local.edges:
        pa, pb = (du[a], dv[a]), (du[b], dv[b])
        hist[pa + pb if pa <= pb else pb + pa] += 1
    return dict(hist)


def effective_resistances(local: Graph, component: Sequence[int]):
    """Pairwise effective resistances on one connected component.

    Returns ``(matrix, degraded)`` where ``matrix[i, j]`` is the resistance
    between ``component[i]`` and ``component[j]``.
    """
    m = len(component)
    index = {v: i for i, v in enumerate(component)}
    lap = np.zeros((m, m))
    for v in component:
        i = index[v]
        for w in local.adjacency[v]:
            lap[i, index[w]] = -1.0
        lap[i, i] = len(local.adjacency[v])
    try:
        pinv = np.linalg.pinv(lap, hermitian=True)
    except np.linalg.LinAlgError:
        return np.full((m, m), np.nan), True
    diag = np.diag(pinv)
    res = diag[:, None] + diag[None, :] - 2.0 * pinv
    residual = np.abs(lap @ pinv @ lap - lap).max() if m else 0.0
    degraded = not np.all(np.isfinite(res)) or residual > 1e-8 * max(1.0, np.abs(lap).max())
    return res, bool(degraded)


def resistance_encoding(sub: RootedSubgraph) -> tuple[ResistanceStats, ...]:
    """Per root: min/max/sum/mean effective resistance to the other nodes of its component."""
    out = []
    n = sub.local.num_nodes
    for r, dist in zip(sub.roots, sub.root_distances):
        component = [v for v in range(n) if dist[v] != UNREACHABLE]
        excluded = n - len(component)
        if len(component) == 1:
            out.append(ResistanceStats(None, None, 0.0, None, 1, excluded))
            continue
        res, degraded = effective_resistances(sub.local, component)
        i = component.index(r)
        vals = [float(res[i, j]) for j in range(len(component)) if j != i]
        total = sum(vals)
        out.append(
            ResistanceStats(
                round(min(vals), ROUND_DIGITS),
                round(max(vals), ROUND_DIGITS),
                round(total, ROUND_DIGITS),
                round(total / len(vals), ROUND_DIGITS),
                len(component),
                excluded,
                degraded,
            )
        )
    return tuple(out)


def encode_subgraph(sub: RootedSubgraph, config: EncodingConfig = EncodingConfig()) -> StructuralEncoding:
    if config.edge_dist and sub.arity != 2:
        raise UnsupportedError(
            f"edge-level distance labels need a 2-tuple, got arity {sub.arity}; "
            "use config.for_arity(k) to drop them"
        )
    return StructuralEncoding(
        hop=sub.hop,
        tuple_arity=sub.arity,
        degree_hist=degree_encoding(sub) if config.degree else None,
        root_dist_hists=node_distance_encoding(sub) if config.node_dist else None,
        edge_label_hist=edge_distance_encoding(sub) if config.edge_dist else None,
        resistance_stats=resistance_encoding(sub) if config.resistance else None,
    )


def structural_embedding(
    g: Graph, roots: Sequence[int], h: int, config: EncodingConfig = EncodingConfig()
) -> StructuralEncoding:
    return encode_subgraph(rooted_subgraph(g, roots, h), config)


def _encode_chunk(args):
    g, tuples, h, config = args
    return [structural_embedding(g, t, h, config) for t in tuples]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("ESCGRAPH_WORKERS", "1")))
    except ValueError:
        return 1


def encode_all(
    g: Graph,
    policy: str,
    h: int,
    config: EncodingConfig = EncodingConfig(),
    workers: int | None = None,
) -> dict[tuple[int, ...], StructuralEncoding]:
    """Encodings for every tuple of ``policy``, keyed in enumeration order.

    With ``workers > 1`` (default from ``ESCGRAPH_WORKERS``) tuples are split
    into contiguous chunks over a process pool; the result is identical.
    """
    tuples = list(enumerate_tuples(g, policy))
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(tuples) < 64:
        return {t: structural_embedding(g, t, h, config) for t in tuples}
    from concurrent.futures import ProcessPoolExecutor

    size = -(-len(tuples) // workers)
    chunks = [tuples[i : i + size] for i in range(0, len(tuples), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_encode_chunk, [(g, c, h, config) for c in chunks]))
    return {t: e for chunk, encs in zip(chunks, results) for t, e in zip(chunk, encs)}


# -- dense export ---------------------------------------------------------------


def build_dictionary(encodings: Iterable[StructuralEncoding]) -> dict[str, list]:
    """Dataset-wide index for dense vectors.

    Degrees and distances map to the integer range ``0..max`` (an
    UNREACHABLE bucket is appended last when seen); edge labels are listed
    in sorted order.
    """
    max_deg, max_dist, unreachable = -1, -1, False
    labels: set = set()
    for enc in encodings:
        if enc.degree_hist:
            max_deg = max(max_deg, max(enc.degree_hist))
        for hist in enc.root_dist_hists or ():
            for d in hist:
                if d == UNREACHABLE:
                    unreachable = True
                else:
                    max_dist = max(max_dist, d)
        if enc.edge_label_hist:
            labels.update(enc.edge_label_hist)
    dist_keys = list(range(max_dist + 1)) + ([UNREACHABLE] if unreachable else [])
    return {
        "degree": list(range(max_deg + 1)),
        "node_dist": dist_keys,
        "edge_dist": [list(lab) for lab in sorted(labels)],
    }


def to_dense(hist: Mapping, keys: Sequence) -> list[int]:
    """Dense count vector of ``hist`` against an ordered key list."""
    index = {tuple(k) if isinstance(k, list) else k: i for i, k in enumerate(keys)}
    vec = [0] * len(keys)
    for key, count in hist.items():
        try:
            vec[index[key]] += count
        except KeyError:
            raise ArgumentError(f"key {key!r} missing from dictionary") from None
    return vec


def resistance_stats_close(a: ResistanceStats, b: ResistanceStats, rel: float = 1e-9) -> bool:
    """Compare resistance statistics up to floating tolerance."""
    fa, fb = a.as_tuple(), b.as_tuple()
    for x, y in zip(fa, fb):
        if isinstance(x, float) and isinstance(y, float):
            if not isclose(x, y, rel_tol=rel, abs_tol=rel):
                return False
        elif x != y:
            return False
    return True
