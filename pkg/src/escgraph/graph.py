"""Immutable simple undirected graphs, traversal and generators."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ArgumentError, BoundsError, GenerationError, ParseError, ValidationError

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes ``0..num_nodes-1``.

    ``adjacency[v]`` is the ascending tuple of neighbours of ``v``.
    ``edge_attr`` is stored as a sorted tuple of ``((u, v), label)`` with
    ``u < v`` so the graph stays hashable.

    Build instances with :meth:`from_edges`; the raw constructor trusts its
    arguments.
    """

    num_nodes: int
    adjacency: tuple[tuple[int, ...], ...]
    node_attr: tuple[int, ...] | None = None
    edge_attr: tuple[tuple[tuple[int, int], int], ...] | None = None
    original_ids: tuple[int, ...] | None = None

    @classmethod
    def from_edges(
        cls,
        num_nodes: int,
        edges: Iterable[tuple[int, int]],
        node_attr: Sequence[int] | None = None,
        edge_attr: Mapping[tuple[int, int], int] | None = None,
        original_ids: Sequence[int] | None = None,
    ) -> "Graph":
        if num_nodes < 0:
            raise ArgumentError(f"num_nodes must be >= 0, got {num_nodes}")
        nbrs: list[set[int]] = [set() for _ in range(num_nodes)]
        for u, v in edges:
            if not (0 <= u < num_nodes and 0 <= v < num_nodes):
                raise BoundsError(f"edge ({u}, {v}) out of range for {num_nodes} nodes")
            if u == v:
                raise ValidationError(f"self-loop at node {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if node_attr is not None:
            node_attr = tuple(int(x) for x in node_attr)
            if len(node_attr) != num_nodes:
                raise ValidationError("node_attr length does not match num_nodes")
        eattr = None
        if edge_attr is not None:
            items = {}
            for (u, v), lab in edge_attr.items():
                key = (min(u, v), max(u, v))
                if key[1] not in nbrs[key[0]]:
                    raise ValidationError(f"edge attribute on non-edge {key}")
                items[key] = int(lab)
            eattr = tuple(sorted(items.items()))
        ids = tuple(original_ids) if original_ids is not None else None
        return cls(num_nodes, tuple(tuple(sorted(s)) for s in nbrs), node_attr, eattr, ids)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.num_nodes) for v in self.adjacency[u] if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def edge_attr_map(self) -> dict[tuple[int, int], int]:
        return dict(self.edge_attr or ())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def csr(self):
        """Compressed sparse row view ``(indptr, indices)`` as numpy arrays."""
        import numpy as np

        indptr = np.zeros(self.num_nodes + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter((v for a in self.adjacency for v in a), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    def check_node(self, v: int) -> None:
        if not 0 <= v < self.num_nodes:
            raise BoundsError(f"node {v} out of range for {self.num_nodes} nodes")

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with node ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.num_nodes)):
            raise ArgumentError("perm must be a permutation of the node ids")
        attr = None
        if self.node_attr is not None:
            attr = [0] * self.num_nodes
            for v, a in enumerate(self.node_attr):
                attr[perm[v]] = a
        eattr = None
        if self.edge_attr is not None:
            eattr = {(perm[u], perm[v]): lab for (u, v), lab in self.edge_attr}
        return Graph.from_edges(
            self.num_nodes, ((perm[u], perm[v]) for u, v in self.edges), attr, eattr
        )

    def __repr__(self) -> str:
        return f"Graph(num_nodes={self.num_nodes}, num_edges={self.num_edges})"


@dataclass(frozen=True)
class DistanceMap:
    source: int
    dist: tuple[int, ...]
    cap: int

    def __getitem__(self, v: int) -> int:
        return self.dist[v]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.dist))


_HEADER = re.compile(r"^n\s+(\S+)$")


def from_edge_list(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    Blank lines and lines starting with ``#`` are ignored. An optional
    ``n <count>`` header fixes the node count (ids must then lie below it,
    isolated nodes are kept). Without a header, ids are re-indexed densely
    in ascending order when they have gaps and the original ids are kept on
    ``Graph.original_ids``. A ``directed`` line rejects the document.
    """
    declared = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "directed":
            raise ValidationError(f"line {lineno}: directed input is not supported")
        m = _HEADER.match(line)
        if m:
            if declared is not None or pairs:
                raise ParseError("header must precede edges and appear once", lineno)
            try:
                declared = int(m.group(1))
            except ValueError:
                raise ParseError(f"bad node count {m.group(1)!r}", lineno) from None
            if declared < 0:
                raise ParseError("node count must be non-negative", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("node ids must be non-negative", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at node {u}")
        pairs.append((u, v, lineno))

    if declared is not None:
        for u, v, lineno in pairs:
            if u >= declared or v >= declared:
                raise BoundsError(f"line {lineno}: node id {max(u, v)} >= declared n={declared}")
        return Graph.from_edges(declared, ((u, v) for u, v, _ in pairs))

    used = sorted({x for u, v, _ in pairs for x in (u, v)})
    if used == list(range(len(used))):
        return Graph.from_edges(len(used), ((u, v) for u, v, _ in pairs))
    index = {old: new for new, old in enumerate(used)}
    return Graph.from_edges(
        len(used), ((index[u], index[v]) for u, v, _ in pairs), original_ids=used
    )


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.num_nodes}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int, cap: int | None = None) -> DistanceMap:
    """Hop distances from ``source``; nodes farther than ``cap`` get UNREACHABLE."""
    g.check_node(source)
    if cap is None:
        cap = g.num_nodes
    if cap < 0:
        raise ArgumentError("cap must be >= 0")
    dist = [UNREACHABLE] * g.num_nodes
    dist[source] = 0
    adj = g.adjacency
    frontier = [source]
    d = 0
    while frontier and d < cap:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return DistanceMap(source, tuple(dist), cap)


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph on ``nodes`` with ids renumbered in ascending parent order."""
    keep = sorted(set(nodes))
    for v in keep:
        g.check_node(v)
    mapping = {old: new for new, old in enumerate(keep)}
    return _induced(g, keep, mapping), mapping


def _induced(g: Graph, order: Sequence[int], mapping: Mapping[int, int]) -> Graph:
    """Induced subgraph with local ids given by ``mapping`` (no validation)."""
    adjacency = []
    for old in order:
        adjacency.append(tuple(sorted(mapping[w] for w in g.adjacency[old] if w in mapping)))
    node_attr = None
    if g.node_attr is not None:
        node_attr = tuple(g.node_attr[old] for old in order)
    edge_attr = None
    if g.edge_attr is not None:
        items = []
        for (u, v), lab in g.edge_attr:
            if u in mapping and v in mapping:
                a, b = mapping[u], mapping[v]
                items.append(((min(a, b), max(a, b)), lab))
        edge_attr = tuple(sorted(items))
    return Graph(len(order), tuple(adjacency), node_attr, edge_attr)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.num_nodes
    edges = list(g1.edges) + [(u + off, v + off) for u, v in g2.edges]
    attr = None
    if g1.node_attr is not None or g2.node_attr is not None:
        attr = list(g1.node_attr or [0] * g1.num_nodes) + list(g2.node_attr or [0] * g2.num_nodes)
    eattr = None
    if g1.edge_attr is not None or g2.edge_attr is not None:
        eattr = dict(g1.edge_attr or ())
        eattr.update({(u + off, v + off): lab for (u, v), lab in (g2.edge_attr or ())})
    return Graph.from_edges(g1.num_nodes + g2.num_nodes, edges, attr, eattr)


# -- generators ---------------------------------------------------------------


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ArgumentError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on ``n`` nodes (``n - 1`` edges)."""
    if n < 1:
        raise ArgumentError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ArgumentError("clique needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    """Star on ``n`` nodes: centre 0 joined to leaves ``1..n-1``."""
    if n < 2:
        raise ArgumentError("star needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def rook_graph(size: int = 4) -> Graph:
    """Rook's graph on a ``size`` x ``size`` board; cell (r, c) is node ``r*size + c``."""
    edges = []
    for a, b in combinations(range(size * size), 2):
        if a // size == b // size or a % size == b % size:
            edges.append((a, b))
    return Graph.from_edges(size * size, edges)


def shrikhande_graph() -> Graph:
    """Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}."""
    gens = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    edges = []
    for a, b in combinations(range(16), 2):
        diff = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
        if diff in gens:
            edges.append((a, b))
    return Graph.from_edges(16, edges)


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


_NAME = re.compile(r"^\s*([A-Za-z_0-9]+?)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$")


def named_graph(name: str, *params: int) -> Graph:
    """Build a graph from a family name.

    Accepts ``named_graph("cycle", 6)`` as well as the string forms
    ``"cycle(6)"`` and ``"K4"``. Families: cycle, path, clique, star (each
    parameterised by node count), two_triangles, rook4x4, shrikhande.
    """
    m = _NAME.match(name)
    if not m:
        raise ArgumentError(f"unknown graph name {name!r}")
    family = m.group(1).lower()
    args = list(params)
    if m.group(2):
        try:
            args = [int(x) for x in m.group(2).split(",") if x.strip()] + args
        except ValueError:
            raise ArgumentError(f"bad parameters in {name!r}") from None
    km = re.fullmatch(r"k(\d+)", family.lower())
    if km and not args:
        family, args = "clique", [int(km.group(1))]

    builders = {"cycle": cycle_graph, "path": path_graph, "clique": complete_graph, "star": star_graph}
    fixed = {"two_triangles": two_triangles, "rook4x4": rook_graph, "shrikhande": shrikhande_graph}
    if family in builders:
        if len(args) != 1:
            raise ArgumentError(f"{family} takes exactly one parameter")
        return builders[family](args[0])
    if family in fixed:
        if args:
            raise ArgumentError(f"{family} takes no parameters")
        return fixed[family]()
    raise ArgumentError(f"unknown graph name {name!r}")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) using ``random.Random(seed)``.

    Pairs ``(i, j)`` with ``i < j`` are visited in lexicographic order and
    each is kept iff the next ``random()`` draw is below ``p``.
    """
    if n < 0:
        raise ArgumentError("n must be >= 0")
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_regular(n: int, r: int, seed: int, max_tries: int = 10_000) -> Graph:
    """Uniform-ish simple r-regular graph by the pairing model with rejection.

    Each attempt shuffles the ``n*r`` half-edges and pairs them
    consecutively; the first attempt without loops or repeated pairs is
    returned. All attempts draw from one ``random.Random(seed)`` stream, so
    nearby seeds do not share retries.
    """
    if n <= 0 or r < 0:
        raise ArgumentError("need n > 0 and r >= 0")
    if (n * r) % 2:
        raise ArgumentError(f"n*r must be even (n={n}, r={r})")
    if r >= n:
        raise ArgumentError(f"degree r={r} must be < n={n}")
    points = [v for v in range(n) for _ in range(r)]
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = points[:]
        rng.shuffle(pts)
        seen = set()
        ok = True
        for i in range(0, len(pts), 2):
            u, v = pts[i], pts[i + 1]
            key = (u, v) if u < v else (v, u)
            if u == v or key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return Graph.from_edges(n, seen)
    raise GenerationError(f"no simple {r}-regular graph on {n} nodes after {max_tries} attempts")
