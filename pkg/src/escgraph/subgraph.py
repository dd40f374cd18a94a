"""Rooted h-hop subgraphs of node tuples."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import ArgumentError, UnsupportedError
from .graph import UNREACHABLE, Graph, _induced, bfs_distances

POLICIES = ("nodes", "edges", "all_pairs")
MAX_ARITY = 2


@dataclass(frozen=True)
class RootedSubgraph:
    """Induced subgraph on the union of the roots' h-hop balls.

    Local ids: the roots come first in tuple order, the remaining nodes
    follow in ascending parent id. ``to_parent[i]`` is the parent id of
    local node ``i``.
    """

    local: Graph
    roots: tuple[int, ...]
    to_parent: tuple[int, ...]
    hop: int

    @property
    def arity(self) -> int:
        return len(self.roots)

    @cached_property
    def root_distances(self) -> tuple[tuple[int, ...], ...]:
        """Within-subgraph hop distances from each root (UNREACHABLE if cut off)."""
        return tuple(bfs_distances(self.local, r, self.local.num_nodes).dist for r in self.roots)


def _check_roots(g: Graph, roots: Sequence[int]) -> tuple[int, ...]:
    roots = tuple(roots)
    if not roots:
        raise ArgumentError("roots must be non-empty")
    for r in roots:
        g.check_node(r)
    return roots


def khop_nodes(g: Graph, roots: Sequence[int], h: int) -> set[int]:
    """Nodes within ``h`` hops of at least one root."""
    roots = _check_roots(g, roots)
    if h < 0:
        raise ArgumentError("h must be >= 0")
    adj = g.adjacency
    seen = set(roots)
    frontier = list(seen)
    for _ in range(h):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return seen


def rooted_subgraph(g: Graph, roots: Sequence[int], h: int) -> RootedSubgraph:
    roots = _check_roots(g, roots)
    if len(roots) > MAX_ARITY:
        raise UnsupportedError(f"tuple arity {len(roots)} > {MAX_ARITY} is not supported")
    if len(set(roots)) != len(roots):
        raise ArgumentError(f"roots must be distinct, got {roots}")
    nodes = khop_nodes(g, roots, h)
    rest = sorted(nodes.difference(roots))
    order = list(roots) + rest
    mapping = {old: new for new, old in enumerate(order)}
    local = _induced(g, order, mapping)
    return RootedSubgraph(local, tuple(range(len(roots))), tuple(order), h)


def enumerate_tuples(g: Graph, policy: str) -> Iterator[tuple[int, ...]]:
    """Ordered root tuples in ascending lexicographic order.

    ``nodes`` yields 1-tuples, ``edges`` yields both orientations of every
    edge, ``all_pairs`` yields every ordered pair of distinct nodes.
    """
    policy = policy.replace("-", "_")
    if policy == "nodes":
        for v in range(g.num_nodes):
            yield (v,)
    elif policy == "edges":
        for u in range(g.num_nodes):
            for v in g.adjacency[u]:
                yield (u, v)
    elif policy == "all_pairs":
        n = g.num_nodes
        for u in range(n):
            for v in range(n):
                if u != v:
                    yield (u, v)
    else:
        raise ArgumentError(f"unknown tuple policy {policy!r}; expected one of {POLICIES}")


__all__ = [
    "POLICIES",
    "RootedSubgraph",
    "UNREACHABLE",
    "enumerate_tuples",
    "khop_nodes",
    "rooted_subgraph",
]
