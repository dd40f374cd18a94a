"""Colour refinement: 1-WL, k-WL over ordered tuples, and ESC refinement.

Colours are 128-bit content hashes, so a colour only depends on the
refinement history of its node or tuple, never on enumeration order.
Graph comparisons refine the disjoint union of both graphs and compare the
colour histograms of the two halves.
"""

from __future__ import annotations

from hashlib import blake2b
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Hashable, Sequence

import numpy as np

from .encoding import EncodingConfig, encode_all
from .errors import ArgumentError, ResourceError
from .graph import Graph, disjoint_union

DEFAULT_TUPLE_BUDGET = 5_000_000
DEFAULT_CFI_MAX_NODES = 1 << 16


def digest(obj: Hashable) -> bytes:
    """16-byte (128-bit) hash of a nested tuple of ints/strings, stable across runs."""
    return blake2b(repr(obj).encode(), digest_size=16).digest()


def color_int(c: bytes) -> int:
    return int.from_bytes(c, "big")


@dataclass(frozen=True)
class ColoringPartition:
    """Stable colouring of nodes (``arity`` 1) or ordered k-tuples.

    ``class_counts[t]`` is the number of colour classes after round ``t``
    (index 0 is the initial colouring).
    """

    arity: int
    colors: dict
    rounds: int
    class_counts: tuple[int, ...]

    @property
    def histogram(self) -> list[tuple[int, int]]:
        return sorted(Counter(self.colors.values()).items())

    def classes(self) -> list[frozenset]:
        groups: dict[int, set] = {}
        for item, c in self.colors.items():
            groups.setdefault(c, set()).add(item)
        return sorted((frozenset(s) for s in groups.values()), key=lambda s: min(s))


def _initial_node_colors(g: Graph) -> list[bytes]:
    attr = g.node_attr or (0,) * g.num_nodes
    return [digest(("node", a)) for a in attr]


def refine_round(adj, colors: Sequence[bytes], messages=None) -> list[bytes]:
    """One synchronous colour update over adjacency lists ``adj``.

    Colours are 16-byte digests; the neighbour multiset is the sorted
    concatenation of fixed-width entries, so hashing it is injective up to
    digest collisions. ``messages[v][i]`` (16 bytes) is attached to the
    entry for neighbour ``adj[v][i]``.
    """
    join = b"".join
    if messages is None:
        return [
            blake2b(colors[v] + join(sorted([colors[u] for u in nb])), digest_size=16).digest()
            for v, nb in enumerate(adj)
        ]
    return [
        blake2b(colors[v] + join(sorted([colors[u] + m for u, m in zip(nb, ms)])), digest_size=16).digest()
        for v, (nb, ms) in enumerate(zip(adj, messages))
    ]


def _refine_nodes(g: Graph, colors: list[bytes], max_rounds: int | None, messages=None):
    """Shared 1-WL loop; ``messages`` as in :func:`refine_round`."""
    counts = [len(set(colors))]
    rounds = 0
    limit = g.num_nodes + 1 if max_rounds is None else max_rounds
    while rounds < limit:
        colors = refine_round(g.adjacency, colors, messages)
        rounds += 1
        counts.append(len(set(colors)))
        if counts[-1] == counts[-2]:
            break
    return colors, rounds, tuple(counts)


def wl1_refine(g: Graph, max_rounds: int | None = None) -> ColoringPartition:
    """1-WL to stability.

    Initial colours come from node attributes (uniform when absent). A
    round whose class count does not grow ends the run and is included in
    ``rounds``.
    """
    colors, rounds, counts = _refine_nodes(g, _initial_node_colors(g), max_rounds)
    return ColoringPartition(1, {v: color_int(c) for v, c in enumerate(colors)}, rounds, counts)


# -- k-WL ---------------------------------------------------------------------

_LANE_SEEDS = (np.uint64(0x9E3779B97F4A7C15), np.uint64(0xD1B54A32D192ED03))
_MULTS = (np.uint64(0xBF58476D1CE4E5B9), np.uint64(0x94D049BB133111EB))


def _mix(x: np.ndarray) -> np.ndarray:
    # splitmix64 finaliser; uint64 arithmetic wraps
    x = x ^ (x >> np.uint64(30))
    x = x * _MULTS[0]
    x = x ^ (x >> np.uint64(27))
    x = x * _MULTS[1]
    return x ^ (x >> np.uint64(31))


def _combine(h: np.ndarray, v: np.ndarray, salt: int) -> np.ndarray:
    return _mix(h * np.uint64(0x100000001B3) + _mix(v + np.uint64(salt)))


def _distinct(lanes: Sequence[np.ndarray]) -> int:
    stacked = np.stack([l.ravel() for l in lanes], axis=1)
    return int(np.unique(stacked, axis=0).shape[0])


def _atomic_features(g: Graph, k: int) -> list[np.ndarray]:
    """Integer arrays of shape ``(n,)*k`` that together fix the isomorphism type."""
    n = g.num_nodes
    adj = np.zeros((n, n), dtype=np.uint64)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    if g.edge_attr:
        for (u, v), lab in g.edge_attr:
            adj[u, v] = adj[v, u] = np.uint64(2 + lab)
    attr = np.array(g.node_attr or [0] * n, dtype=np.int64).astype(np.uint64)
    idx = np.indices((n,) * k, dtype=np.int64) if n else np.zeros((k,) + (0,) * k, dtype=np.int64)
    feats = []
    for i in range(k):
        feats.append(attr[idx[i]])
        for j in range(i + 1, k):
            eq = (idx[i] == idx[j]).astype(np.uint64)
            feats.append(eq * np.uint64(1 << 40) + adj[idx[i], idx[j]])
    return feats


def kwl_refine(
    g: Graph, k: int, max_rounds: int | None = None, budget: int = DEFAULT_TUPLE_BUDGET
) -> ColoringPartition:
    """k-WL over all ordered k-tuples.

    The i-th neighbourhood of a tuple replaces its i-th entry by every
    node. Each multiset is hashed as the wrapping sum of mixed colours,
    computed once per fibre with a vectorised reduction along axis ``i``.
    """
    if k == 1:
        return wl1_refine(g, max_rounds)
    if k not in (2, 3):
        raise ArgumentError(f"k-WL supports k in {{1, 2, 3}}, got {k}")
    n = g.num_nodes
    if n**k > budget:
        raise ResourceError(f"{n}^{k} = {n ** k} tuples exceeds the budget of {budget}")
    feats = _atomic_features(g, k)
    with np.errstate(over="ignore"):
        lanes = []
        for seed in _LANE_SEEDS:
            h = np.full((n,) * k, seed, dtype=np.uint64)
            for j, f in enumerate(feats):
                h = _combine(h, f, j + 1)
            lanes.append(h)
        counts = [_distinct(lanes)]
        rounds = 0
        limit = n**k + 1 if max_rounds is None else max_rounds
        while rounds < limit:
            new = []
            for lane_no, c in enumerate(lanes):
                h = _combine(np.full_like(c, _LANE_SEEDS[lane_no]), c, 0)
                for i in range(k):
                    fibre = _mix(c ^ np.uint64(0xA5A5A5A5 + 7919 * (i + 1) + 104729 * lane_no))
                    summed = np.sum(fibre, axis=i, keepdims=True, dtype=np.uint64)
                    h = _combine(h, np.broadcast_to(summed, c.shape), 100 + i)
                new.append(h)
            lanes = new
            rounds += 1
            counts.append(_distinct(lanes))
            if counts[-1] == counts[-2]:
                break
    l0, l1 = (l.ravel().tolist() for l in lanes)
    colors = {t: (a << 64) | b for t, a, b in zip(product(range(n), repeat=k), l0, l1)}
    return ColoringPartition(k, colors, rounds, tuple(counts))


def _split_histograms(part: ColoringPartition, n1: int):
    def side(item):
        nodes = (item,) if part.arity == 1 else item
        if all(x < n1 for x in nodes):
            return 0
        if all(x >= n1 for x in nodes):
            return 1
        return None

    hists = (Counter(), Counter())
    for item, c in part.colors.items():
        s = side(item)
        if s is not None:
            hists[s][c] += 1
    return hists


def wl_distinguish(g1: Graph, g2: Graph, k: int, budget: int = DEFAULT_TUPLE_BUDGET) -> bool:
    """True iff k-WL on the disjoint union gives the two halves different histograms."""
    union = disjoint_union(g1, g2)
    if k == 1:
        part = wl1_refine(union)
    else:
        part = kwl_refine(union, k, budget=budget)
    h1, h2 = _split_histograms(part, g1.num_nodes)
    return h1 != h2


# -- CFI graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class CfiSpec:
    k: int
    ell: int

    def __post_init__(self):
        if self.k < 2:
            raise ArgumentError(f"CFI needs k >= 2, got {self.k}")
        if not 0 <= self.ell <= self.k + 1:
            raise ArgumentError(f"CFI twist ell must lie in 0..{self.k + 1}, got {self.ell}")

    @property
    def num_nodes(self) -> int:
        return (self.k + 1) * 2 ** (self.k - 1)


def cfi_nodes(spec: CfiSpec) -> list[tuple[int, tuple[int, ...]]]:
    """Node names ``(a, bits)`` in lexicographic order, ``a`` in ``1..k+1``."""
    k, ell = spec.k, spec.ell
    out = []
    for a in range(1, k + 2):
        parity = 0 if a <= k - ell + 1 else 1
        for bits in product((0, 1), repeat=k):
            if sum(bits) % 2 == parity:
                out.append((a, bits))
    return out


def cfi_graph(spec: CfiSpec | tuple[int, int], max_nodes: int = DEFAULT_CFI_MAX_NODES) -> Graph:
    """Parity-twisted CFI graph.

    ``(a, v)`` and ``(a', v')`` are adjacent iff some ``m`` in ``1..k`` has
    ``a' = a + m (mod k+1)`` and ``v[m] = v'[k-m+1]`` (1-based bits).
    """
    if not isinstance(spec, CfiSpec):
        spec = CfiSpec(*spec)
    if spec.num_nodes > max_nodes:
        raise ResourceError(f"CFI graph would have {spec.num_nodes} nodes (limit {max_nodes})")
    k = spec.k
    nodes = cfi_nodes(spec)
    edges = []
    for i, (a, v) in enumerate(nodes):
        for j in range(i + 1, len(nodes)):
            b, w = nodes[j]
            m = (b - a) % (k + 1)
            if m == 0:
                continue
            if v[m - 1] == w[k - m]:
                edges.append((i, j))
    return Graph.from_edges(len(nodes), edges)


# -- ESC refinement -----------------------------------------------------------


def _esc_node_colors(
    g: Graph,
    h: int,
    rounds: int | None,
    use_message_passing: bool,
    policy: str,
    config: EncodingConfig,
    encodings=None,
) -> list[bytes]:
    init = _initial_node_colors(g)
    if policy == "nodes":
        encs = encodings or encode_all(g, "nodes", h, config.for_arity(1))
        start = [digest((init[v], encs[(v,)].canonical_key())) for v in range(g.num_nodes)]
        if not use_message_passing:
            return start
        colors, _, _ = _refine_nodes(g, start, rounds)
        return colors
    if policy != "edges":
        raise ArgumentError(f"ESC refinement policy must be 'edges' or 'nodes', got {policy!r}")
    encs = encodings or encode_all(g, "edges", h, config)
    msgs = edge_messages(g, encs)
    if not use_message_passing:
        return [
            blake2b(init[v] + b"".join(sorted(ms)), digest_size=16).digest() for v, ms in enumerate(msgs)
        ]
    colors, _, _ = _refine_nodes(g, init, rounds, msgs)
    return colors


def edge_messages(g: Graph, encodings) -> list[list[bytes]]:
    """Per node, the 16-byte digest of each incident rooted edge's encoding.

    ``result[v][i]`` belongs to the tuple ``(v, adjacency[v][i])`` and also
    covers the edge label when the graph has one.
    """
    eattr = g.edge_attr_map
    return [
        [digest((encodings[(v, u)].canonical_key(), eattr.get((min(u, v), max(u, v))))) for u in nb]
        for v, nb in enumerate(g.adjacency)
    ]


def esc_refine(
    g: Graph,
    h: int,
    rounds: int | None = None,
    use_message_passing: bool = True,
    policy: str = "edges",
    config: EncodingConfig = EncodingConfig(),
    encodings=None,
) -> tuple[tuple[int, int], ...]:
    """Graph fingerprint from hash refinement with structural edge messages.

    Each round sets ``c_v <- H(c_v, {{(c_u, s_vu)}})`` where ``s_vu`` is the
    structural encoding of the rooted edge ``(v, u)``. Without message
    passing only one aggregation of the encodings is made. ``policy="nodes"``
    uses node-rooted encodings as initial colours instead of edge messages.
    The fingerprint is the sorted colour histogram.
    """
    colors = _esc_node_colors(g, h, rounds, use_message_passing, policy, config, encodings)
    return tuple(sorted(Counter(color_int(c) for c in colors).items()))


def esc_distinguish(
    g1: Graph,
    g2: Graph,
    h: int,
    use_message_passing: bool = True,
    policy: str = "edges",
    config: EncodingConfig = EncodingConfig(),
) -> bool:
    union = disjoint_union(g1, g2)
    colors = _esc_node_colors(union, h, None, use_message_passing, policy, config)
    n1 = g1.num_nodes
    return Counter(colors[:n1]) != Counter(colors[n1:])


def fingerprint_line(fp) -> str:
    """Serialise a fingerprint as sorted ``[colour-hex, multiplicity]`` pairs."""
    import json

    return json.dumps([[f"{c:032x}", m] for c, m in sorted(fp)], separators=(",", ":"))
