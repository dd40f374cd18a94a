"""Substructure counting.

Two independent routes:

* ``oracle_count`` enumerates occurrences by backtracking and is the
  ground truth.
* ``graph_count_from_tuples`` / ``node_count_from_tuples`` read per-tuple
  counts off structural encodings in closed form and aggregate them.

An occurrence is identified by its edge set. Per-tuple counts use one
anchoring convention for both routes:

* cycles, cliques and pattern graphs: ordered edge ``(u, v)`` whose edge
  belongs to the occurrence (constant ``2 * |E(pattern)|``);
* stars: ordered ``(centre, leaf)`` (constant ``p - 1``);
* paths: ordered ``(end, end)`` pairs (constant 2).
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .encoding import EncodingConfig, StructuralEncoding, encode_all, structural_embedding
from .errors import ArgumentError, DomainError, ResourceError
from .graph import Graph, erdos_renyi

KINDS = (
    "cycle",
    "clique",
    "path",
    "star",
    "tailed_triangle",
    "chordal_cycle",
    "triangle_rectangle",
    "custom_pattern",
)
MODES = ("subgraph", "induced")

DEFAULT_MAX_NODES = 64
DEFAULT_BUDGET = 20_000_000

# edge label -> number of 4-cycles through the rooted edge it closes
FOUR_CYCLE_WEIGHTS = {
    (1, 2, 2, 1): 1,
    (1, 1, 2, 1): 1,
    (1, 1, 1, 2): 1,
    (1, 1, 1, 1): 2,
}
ROOT_EDGE = (0, 1, 1, 0)
TRIANGLE_LABEL = (0, 1, 1, 1)
CLIQUE4_LABEL = (1, 1, 1, 1)
INDUCED_LEAF_LABEL = (0, 1, 1, 2)
INDUCED_LEAF_PAIR_LABEL = (1, 2, 1, 2)
OTHER_SIDE_LABEL = (1, 0, 2, 1)
CROSS_LABEL = (1, 2, 2, 1)

_PATTERN_EDGES = {
    "tailed_triangle": (4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    "chordal_cycle": (4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    "triangle_rectangle": (5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
}


@dataclass(frozen=True)
class Substructure:
    """A pattern to count.

    ``size`` is the node count for cycles, cliques and stars (star size
    includes the centre) and the edge count for paths.
    """

    kind: str
    size: int | None = None
    mode: str = "subgraph"
    pattern: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ArgumentError(f"unknown substructure kind {self.kind!r}")
        if self.mode not in MODES:
            raise ArgumentError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.kind in ("cycle", "clique") and (self.size is None or self.size < 3):
            raise ArgumentError(f"{self.kind} needs size >= 3")
        if self.kind == "path" and (self.size is None or self.size < 1):
            raise ArgumentError("path needs size >= 1 (edges)")
        if self.kind == "star" and (self.size is None or self.size < 3):
            raise ArgumentError("star needs size >= 3 (nodes incl. centre)")
        if self.kind == "custom_pattern" and self.pattern is None:
            raise ArgumentError("custom_pattern needs a pattern graph")
        if self.kind in _PATTERN_EDGES and self.size is None:
            object.__setattr__(self, "size", _PATTERN_EDGES[self.kind][0])

    @property
    def name(self) -> str:
        if self.kind in ("cycle", "clique", "path", "star"):
            base = f"{self.size}-{self.kind}"
        else:
            base = self.kind.replace("_", "-")
        return base if self.mode == "subgraph" else f"{base}[induced]"

    def pattern_graph(self) -> Graph:
        if self.kind == "custom_pattern":
            return self.pattern
        if self.kind in _PATTERN_EDGES:
            n, edges = _PATTERN_EDGES[self.kind]
            return Graph.from_edges(n, edges)
        from .graph import complete_graph, cycle_graph, path_graph, star_graph

        return {
            "cycle": cycle_graph,
            "clique": complete_graph,
            "star": star_graph,
            "path": lambda L: path_graph(L + 1),
        }[self.kind](self.size)

    @property
    def num_pattern_edges(self) -> int:
        if self.kind == "cycle":
            return self.size
        if self.kind == "clique":
            return self.size * (self.size - 1) // 2
        if self.kind == "path":
            return self.size
        if self.kind == "star":
            return self.size - 1
        return self.pattern_graph().num_edges

    @property
    def aggregation_constant(self) -> int:
        if self.kind == "star":
            return self.size - 1
        if self.kind == "path":
            return 2
        return 2 * self.num_pattern_edges

    def with_mode(self, mode: str) -> "Substructure":
        return Substructure(self.kind, self.size, mode, self.pattern)


_SIZED = re.compile(r"^(\d+)-([a-z_]+)$")


def parse_substructure(text: str, mode: str = "subgraph") -> Substructure:
    """Parse ``NAME[:L]`` (``cycle:4``) or ``L-NAME`` (``4-cycle``).

    A trailing ``[induced]`` overrides ``mode``.
    """
    t = text.strip().lower()
    if t.endswith("[induced]"):
        t, mode = t[: -len("[induced]")], "induced"
    m = _SIZED.match(t)
    if m:
        kind, size = m.group(2), int(m.group(1))
    else:
        kind, _, size_s = t.partition(":")
        kind = kind.replace("-", "_")
        try:
            size = int(size_s) if size_s else None
        except ValueError:
            raise ArgumentError(f"bad size in {text!r}") from None
    if kind == "triangle":
        kind, size = "cycle", 3
    return Substructure(kind, size, mode)


@dataclass
class CountReport:
    substructure: Substructure
    graph_total: int
    per_node: dict[int, int]
    per_tuple: dict[tuple[int, ...], int]
    aggregation_constant: int
    engine: str = "oracle"

    def check_divisibility(self) -> bool:
        return self.graph_total * self.aggregation_constant == sum(self.per_tuple.values())

    def nonzero_tuples(self) -> dict[tuple[int, ...], int]:
        return {t: c for t, c in self.per_tuple.items() if c}

    def to_csv(self, level: str = "node") -> str:
        lines = []
        if level == "node":
            lines.append("node,count")
            lines.extend(f"{v},{c}" for v, c in sorted(self.per_node.items()))
        elif level == "tuple":
            lines.append("u,v,count")
            lines.extend(f"{','.join(map(str, t))},{c}" for t, c in sorted(self.per_tuple.items()))
        lines.append(f"# total,{self.substructure.name},{self.graph_total}")
        return "\n".join(lines) + "\n"


# -- brute-force oracle --------------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.steps = 0

    def tick(self, n: int = 1):
        self.steps += n
        if self.steps > self.limit:
            raise ResourceError(f"enumeration work limit of {self.limit} steps exceeded")


def _induced_ok(g: Graph, nodes: Sequence[int], n_edges: int) -> bool:
    nbr = g.neighbor_sets
    present = sum(1 for a, b in combinations(nodes, 2) if b in nbr[a])
    return present == n_edges


def _cycles(g: Graph, L: int, budget: _Budget):
    adj, nbr = g.adjacency, g.neighbor_sets
    for s in range(g.num_nodes):
        path = [s]
        on_path = {s}

        def extend():
            budget.tick()
            last = path[-1]
            if len(path) == L:
                if s in nbr[last] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in adj[last]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def _cliques(g: Graph, L: int, budget: _Budget):
    nbr = g.neighbor_sets

    def grow(clique, cands):
        budget.tick()
        if len(clique) == L:
            yield tuple(clique)
            return
        for w in sorted(cands):
            if w > clique[-1]:
                yield from grow(clique + [w], cands & nbr[w])

    for v in range(g.num_nodes):
        yield from grow([v], set(nbr[v]))


def _paths(g: Graph, L: int, budget: _Budget):
    adj = g.adjacency
    for s in range(g.num_nodes):
        path = [s]
        on_path = {s}

        def extend():
            budget.tick()
            if len(path) == L + 1:
                if path[0] < path[-1]:
                    yield tuple(path)
                return
            for w in adj[path[-1]]:
                if w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def _stars(g: Graph, p: int, budget: _Budget, induced: bool):
    nbr = g.neighbor_sets
    for c in range(g.num_nodes):
        for leaves in combinations(g.adjacency[c], p - 1):
            budget.tick()
            if induced and any(b in nbr[a] for a, b in combinations(leaves, 2)):
                continue
            yield c, leaves


def _pattern_embeddings(g: Graph, pattern: Graph, budget: _Budget, induced: bool):
    """Distinct edge sets of subgraphs of ``g`` isomorphic to ``pattern``."""
    k = pattern.num_nodes
    # match pattern nodes in BFS order so each new node has a mapped neighbour
    order, seen = [], set()
    for root in sorted(range(k), key=lambda v: -pattern.degree(v)):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in pattern.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    pnbr, gnbr = pattern.neighbor_sets, g.neighbor_sets
    assign: dict[int, int] = {}
    used: set[int] = set()
    found: set[frozenset] = set()

    def candidates(x):
        anchors = [assign[y] for y in pattern.adjacency[x] if y in assign]
        if anchors:
            cand = set(gnbr[anchors[0]])
            for a in anchors[1:]:
                cand &= gnbr[a]
            return sorted(cand - used)
        return [v for v in range(g.num_nodes) if v not in used]

    def rec(i):
        budget.tick()
        if i == k:
            key = frozenset(
                (min(assign[a], assign[b]), max(assign[a], assign[b])) for a, b in pattern.edges
            )
            found.add(key)
            return
        x = order[i]
        for v in candidates(x):
            if g.degree(v) < pattern.degree(x):
                continue
            if induced and any(
                y in assign and y not in pnbr[x] and assign[y] in gnbr[v] for y in range(k)
            ):
                continue
            assign[x] = v
            used.add(v)
            rec(i + 1)
            del assign[x]
            used.discard(v)

    rec(0)
    return found


def occurrences(
    g: Graph, s: Substructure, budget: int = DEFAULT_BUDGET, max_nodes: int | None = DEFAULT_MAX_NODES
):
    """Every occurrence of ``s`` in ``g`` as ``(edge_set, anchors)``.

    ``anchors`` lists the ordered tuples the occurrence is credited to.
    """
    if max_nodes is not None and g.num_nodes > max_nodes:
        raise ResourceError(f"graph has {g.num_nodes} nodes; oracle limit is {max_nodes}")
    b = _Budget(budget)
    induced = s.mode == "induced"
    out = []
    if s.kind == "cycle" or (s.kind == "clique" and s.size == 3):
        L = s.size
        for cyc in _cycles(g, L, b):
            if induced and not _induced_ok(g, cyc, L):
                continue
            edges = [(cyc[i], cyc[(i + 1) % L]) for i in range(L)]
            out.append((_edge_key(edges), _both_ways(edges)))
    elif s.kind == "clique":
        for cl in _cliques(g, s.size, b):
            edges = list(combinations(cl, 2))
            out.append((_edge_key(edges), _both_ways(edges)))
    elif s.kind == "path":
        L = s.size
        for path in _paths(g, L, b):
            if induced and not _induced_ok(g, path, L):
                continue
            edges = list(zip(path, path[1:]))
            out.append((_edge_key(edges), [(path[0], path[-1]), (path[-1], path[0])]))
    elif s.kind == "star":
        for c, leaves in _stars(g, s.size, b, induced):
            out.append((_edge_key([(c, x) for x in leaves]), [(c, x) for x in leaves]))
    else:
        for key in sorted(_pattern_embeddings(g, s.pattern_graph(), b, induced), key=sorted):
            out.append((key, _both_ways(key)))
    return out


def _edge_key(edges: Iterable[tuple[int, int]]) -> frozenset:
    return frozenset((min(a, b), max(a, b)) for a, b in edges)


def _both_ways(edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out = []
    for a, b in edges:
        out.append((a, b))
        out.append((b, a))
    return out


def oracle_count(
    g: Graph,
    s: Substructure,
    level: str = "graph",
    budget: int = DEFAULT_BUDGET,
    max_nodes: int | None = DEFAULT_MAX_NODES,
) -> CountReport:
    """Exact counts by enumeration.

    ``per_node[v]`` counts occurrences containing ``v``; ``per_tuple``
    follows the anchoring convention of the module docstring. The step
    budget counts backtracking calls, not wall time.
    """
    if level not in ("graph", "node", "tuple"):
        raise ArgumentError(f"level must be graph, node or tuple, got {level!r}")
    occ = occurrences(g, s, budget, max_nodes)
    keys = set()
    per_node: Counter = Counter()
    per_tuple: Counter = Counter()
    for key, anchors in occ:
        if key in keys:
            continue
        keys.add(key)
        for v in {x for e in key for x in e}:
            per_node[v] += 1
        for t in anchors:
            per_tuple[t] += 1
    per_node_full = {v: per_node.get(v, 0) for v in range(g.num_nodes)}
    return CountReport(s, len(keys), per_node_full, dict(per_tuple), s.aggregation_constant, "oracle")


# -- closed forms on encodings -------------------------------------------------


def _labels(enc: StructuralEncoding):
    if enc.tuple_arity != 2:
        raise DomainError("closed-form counts need encodings of 2-tuples")
    if enc.edge_label_hist is None:
        raise ArgumentError("closed-form counts need the edge-level distance encoding")
    if enc.hop < 1:
        raise DomainError("closed-form counts need h >= 1")
    return enc.edge_label_hist


def _edge_rooted(enc: StructuralEncoding):
    hist = _labels(enc)
    if hist.get(ROOT_EDGE, 0) != 1:
        raise DomainError("rooted tuple is not an edge")
    return hist


def cf_triangles_at_tuple(enc: StructuralEncoding) -> int:
    """Common neighbours of the rooted edge: nodes with distance pair (1, 1)."""
    return _edge_rooted(enc).get(TRIANGLE_LABEL, 0)


def cf_4cliques_at_tuple(enc: StructuralEncoding) -> int:
    return _edge_rooted(enc).get(CLIQUE4_LABEL, 0)


def cf_4cycles_at_tuple(enc: StructuralEncoding, mode: str = "subgraph") -> int:
    hist = _edge_rooted(enc)
    if mode == "induced":
        return hist.get(CROSS_LABEL, 0)
    return sum(w * hist.get(lab, 0) for lab, w in FOUR_CYCLE_WEIGHTS.items())


def cf_stars_at_tuple(enc: StructuralEncoding, p: int, mode: str = "subgraph") -> int:
    """p-stars centred at the first root that use the rooted edge."""
    if p < 3:
        raise ArgumentError("star size p must be >= 3")
    hist = _edge_rooted(enc)
    if mode == "induced":
        if p > 4:
            raise DomainError("induced star counts are closed-form only for p <= 4")
        leaves = hist.get(INDUCED_LEAF_LABEL, 0)
        if p == 3:
            return leaves
        return comb(leaves, 2) - hist.get(INDUCED_LEAF_PAIR_LABEL, 0)
    if enc.root_dist_hists is None:
        raise ArgumentError("star counts need the node-level distance encoding")
    n1 = enc.root_dist_hists[0].get(1, 0)
    return comb(n1 - 1, p - 2)


def _paths_from_labels(hist, mode: str) -> tuple[int, int]:
    adjacent = hist.get(ROOT_EDGE, 0) > 0
    if mode == "induced":
        if adjacent:
            return 0, 0
        two = sum(c for (p, q, r, s), c in hist.items() if p == 0 and r == 1 and s == 1)
        return two, hist.get(CROSS_LABEL, 0)
    two = 0
    three = 0
    for (p, q, r, s), c in hist.items():
        if p == 0 and r == 1 and s == 1:
            two += c
        if p == 1 and s == 1 and q != 0 and r != 0:
            three += c
        if r == 1 and q == 1 and p != 0 and s != 0:
            three += c
    return two, three


def cf_paths_at_tuple(g: Graph, pair: Sequence[int], h: int, mode: str = "subgraph") -> dict[str, int]:
    """Number of 2-paths and 3-paths with the two tuple nodes as endpoints."""
    u, v = pair
    if u == v:
        raise ArgumentError("path endpoints must differ")
    if h < 1:
        raise DomainError("path counts need h >= 1")
    enc = structural_embedding(g, (u, v), h, EncodingConfig())
    two, three = _paths_from_labels(enc.edge_label_hist, mode)
    return {"2-path": two, "3-path": three}


CLOSED_FORM = {
    "subgraph": {("cycle", 3), ("cycle", 4), ("clique", 3), ("clique", 4), ("path", 2), ("path", 3), ("star", None)},
    "induced": {("cycle", 3), ("cycle", 4), ("clique", 3), ("clique", 4), ("path", 2), ("path", 3), ("star", 3), ("star", 4)},
}


def closed_form_supported(s: Substructure) -> bool:
    table = CLOSED_FORM[s.mode]
    return (s.kind, s.size) in table or (s.kind, None) in table


def _require_closed_form(s: Substructure):
    if not closed_form_supported(s):
        raise DomainError(f"{s.name} has no closed form over 2-tuple encodings; use oracle_count")


def tuple_count(enc: StructuralEncoding, s: Substructure) -> int:
    """Closed-form count credited to the encoded tuple."""
    _require_closed_form(s)
    if s.kind == "path":
        two, three = _paths_from_labels(_labels(enc), s.mode)
        return two if s.size == 2 else three
    if s.kind == "star":
        return cf_stars_at_tuple(enc, s.size, s.mode)
    if s.size == 3:
        return cf_triangles_at_tuple(enc)
    if s.kind == "clique":
        return cf_4cliques_at_tuple(enc)
    return cf_4cycles_at_tuple(enc, s.mode)


def _policy(s: Substructure) -> str:
    return "all_pairs" if s.kind == "path" else "edges"


def tuple_counts(g: Graph, s: Substructure, h: int, encodings=None) -> dict[tuple[int, int], int]:
    _require_closed_form(s)
    if h < 1:
        raise DomainError("closed-form counts need h >= 1")
    if encodings is None:
        encodings = encode_all(g, _policy(s), h)
    return {t: tuple_count(e, s) for t, e in encodings.items()}


def graph_count_from_tuples(g: Graph, s: Substructure, h: int = 1, encodings=None) -> CountReport:
    """Sum the per-tuple closed forms and divide by the aggregation constant."""
    per_tuple = tuple_counts(g, s, h, encodings)
    total = sum(per_tuple.values())
    const = s.aggregation_constant
    if total % const:
        raise ArithmeticError(f"tuple sum {total} for {s.name} not divisible by {const}")
    per_node = node_count_from_tuples(g, s, h, per_tuple=per_tuple)
    return CountReport(s, total // const, per_node, per_tuple, const, "closed-form")


def _middle_edge_counts(g: Graph, s: Substructure, h: int) -> dict[tuple[int, int], int]:
    """3-paths whose middle edge is the rooted edge (oriented tuples)."""
    out = {}
    for t, enc in encode_all(g, "edges", h).items():
        hist = enc.edge_label_hist
        if s.mode == "induced":
            out[t] = hist.get(INDUCED_LEAF_LABEL, 0) * hist.get(OTHER_SIDE_LABEL, 0) - hist.get(CROSS_LABEL, 0)
        else:
            du = enc.root_dist_hists[0].get(1, 0)
            dv = enc.root_dist_hists[1].get(1, 0)
            out[t] = (du - 1) * (dv - 1) - hist.get(TRIANGLE_LABEL, 0)
    return out


def node_count_from_tuples(g: Graph, s: Substructure, h: int = 1, per_tuple=None) -> dict[int, int]:
    """Occurrences through each node, from neighbour sums of tuple counts.

    Edge-anchored structures divide the neighbour sum by the number of
    pattern edges at a node (2 for cycles, ``L - 1`` for cliques). Stars
    and paths add the centre/end and leaf/interior roles separately.
    """
    _require_closed_form(s)
    if per_tuple is None:
        per_tuple = tuple_counts(g, s, h)
    n = g.num_nodes
    counts = [0] * n
    if s.kind in ("cycle", "clique"):
        div = 2 if s.kind == "cycle" or s.size == 3 else s.size - 1
        for (u, v), c in per_tuple.items():
            counts[u] += c
        for u in range(n):
            if counts[u] % div:
                raise ArithmeticError(f"node {u}: neighbour sum {counts[u]} not divisible by {div}")
            counts[u] //= div
    elif s.kind == "star":
        centre = [0] * n
        for (u, v), c in per_tuple.items():
            centre[u] += c
            counts[v] += c
        for u in range(n):
            counts[u] += centre[u] // (s.size - 1)
    else:
        for (u, v), c in per_tuple.items():
            counts[u] += c
        if s.size == 2:
            centre = tuple_counts(g, Substructure("star", 3, s.mode), h)
            mids = [0] * n
            for (u, v), c in centre.items():
                mids[u] += c
            for u in range(n):
                counts[u] += mids[u] // 2
        else:
            for (u, v), c in _middle_edge_counts(g, s, h).items():
                counts[u] += c
    return dict(enumerate(counts))


# -- witness search ------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Two rooted contexts with equal encodings but different counts."""

    substructure: Substructure
    hop: int
    graph_a: Graph
    tuple_a: tuple[int, int]
    count_a: int
    graph_b: Graph
    tuple_b: tuple[int, int]
    count_b: int
    encoding: StructuralEncoding
    graphs_tried: int


WITNESS_TARGETS = ("5-cycle", "5-cycle[induced]", "5-star[induced]", "4-path[induced]")


def _witness_tuple_counts(g: Graph, s: Substructure) -> Counter:
    """Occurrences through each ordered rooted edge (both roots must be used)."""
    counts: Counter = Counter()
    seen = set()
    for key, anchors in occurrences(g, s, max_nodes=None):
        if key in seen:
            continue
        seen.add(key)
        if s.kind == "star":
            for t in anchors:
                counts[t] += 1
        else:
            for a, b in key:
                counts[(a, b)] += 1
                counts[(b, a)] += 1
    return counts


def find_noncount_witness(
    s: Substructure,
    budget: int = 20_000,
    seed: int = 0,
    h: int = 2,
    min_nodes: int = 5,
    max_nodes: int = 10,
) -> Witness | None:
    """Search random small graphs for indistinguishable rooted edges.

    Every ordered edge of each sampled graph is encoded (degree, node
    distance and edge label histograms at hop ``h``) and the occurrences of
    ``s`` using that edge are counted by enumeration. The first encoding
    seen with two different counts is returned; ``budget`` caps the number
    of sampled graphs. Stars are credited to ``(centre, leaf)`` tuples.
    """
    rng = random.Random(seed)
    seen: dict[tuple, tuple[Graph, tuple[int, int], int, StructuralEncoding]] = {}
    for tried in range(1, budget + 1):
        n = rng.randint(min_nodes, max_nodes)
        p = rng.uniform(0.2, 0.7)
        g = erdos_renyi(n, p, rng.getrandbits(32))
        if g.num_edges == 0:
            continue
        counts = _witness_tuple_counts(g, s)
        for t, enc in encode_all(g, "edges", h, workers=1).items():
            c = counts.get(t, 0)
            key = enc.canonical_key()
            prev = seen.get(key)
            if prev is None:
                seen[key] = (g, t, c, enc)
            elif prev[2] != c:
                return Witness(s, h, prev[0], prev[1], prev[2], g, t, c, enc, tried)
    return None


# the nine per-node targets of the synthetic counting benchmark
COUNTING_TARGETS = (
    ("tailed_triangle", Substructure("tailed_triangle")),
    ("chordal_cycle", Substructure("chordal_cycle")),
    ("4_clique", Substructure("clique", 4)),
    ("4_path", Substructure("path", 4)),
    ("triangle_rectangle", Substructure("triangle_rectangle")),
    ("3_cycle", Substructure("cycle", 3)),
    ("4_cycle", Substructure("cycle", 4)),
    ("5_cycle", Substructure("cycle", 5)),
    ("6_cycle", Substructure("cycle", 6)),
)


def node_labels(g: Graph, budget: int = DEFAULT_BUDGET) -> dict[str, list[int]]:
    """Oracle per-node counts of every counting-benchmark target."""
    out = {}
    for name, s in COUNTING_TARGETS:
        rep = oracle_count(g, s, "node", budget)
        out[name] = [rep.per_node[v] for v in range(g.num_nodes)]
    return out
