"""Per-round cost of ESC refinement against refinement inside every subgraph.

ESC refinement touches each edge once per round. The simulated subgraph
baseline runs one colour-refinement round inside every edge-rooted
subgraph, which costs the sum of subgraph sizes per round. Subgraph
extraction and encoding are done up front and reported as preprocessing.

Timings are minima over repeats, and repeats cycle over all graph sizes so
slow drift (frequency scaling, warm-up) hits every size alike.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .encoding import EncodingConfig, encode_all
from .graph import Graph, erdos_renyi
from .subgraph import enumerate_tuples, rooted_subgraph
from .wl import _initial_node_colors, edge_messages, refine_round

PHASES = ("preprocess", "esc_round", "subgraph_round")


@dataclass(frozen=True)
class BenchRow:
    size: int
    edges: int
    phase: str
    ns: int


class _Prepared:
    def __init__(self, g: Graph, h: int):
        t0 = time.perf_counter_ns()
        encs = encode_all(g, "edges", h, EncodingConfig(), workers=1)
        self.subs = [rooted_subgraph(g, t, h) for t in enumerate_tuples(g, "edges")]
        self.preprocess_ns = time.perf_counter_ns() - t0
        self.g = g
        self.msgs = edge_messages(g, encs)
        self.init = _initial_node_colors(g)
        self.sub_init = [[self.init[p] for p in s.to_parent] for s in self.subs]

    def esc(self, rounds: int):
        colors = self.init
        adj, msgs = self.g.adjacency, self.msgs
        for _ in range(rounds):
            colors = refine_round(adj, colors, msgs)

    def per_subgraph(self, rounds: int):
        states = self.sub_init
        for _ in range(rounds):
            states = [refine_round(s.local.adjacency, c) for s, c in zip(self.subs, states)]


def _timed(fn, *args) -> int:
    t0 = time.perf_counter_ns()
    fn(*args)
    return time.perf_counter_ns() - t0


def run_bench(
    sizes=(100, 200, 400),
    mean_degree: float = 10.0,
    h: int = 1,
    rounds: int = 3,
    repeats: int = 5,
    seed: int = 0,
) -> list[BenchRow]:
    """Time preprocessing and per-round refinement on one ER graph per size."""
    graphs = [erdos_renyi(n, min(1.0, mean_degree / max(n - 1, 1)), seed + n) for n in sizes]
    prepared = [_Prepared(g, h) for g in graphs]
    for p in prepared:  # warm-up
        p.esc(1)
        p.per_subgraph(1)
    esc_best = [None] * len(prepared)
    sub_best = [None] * len(prepared)
    for _ in range(repeats):
        for i, p in enumerate(prepared):
            t = _timed(p.esc, rounds)
            esc_best[i] = t if esc_best[i] is None else min(esc_best[i], t)
            t = _timed(p.per_subgraph, rounds)
            sub_best[i] = t if sub_best[i] is None else min(sub_best[i], t)
    rows = []
    for n, p, e, s in zip(sizes, prepared, esc_best, sub_best):
        m = p.g.num_edges
        rows.append(BenchRow(n, m, "preprocess", p.preprocess_ns))
        rows.append(BenchRow(n, m, "esc_round", e // rounds))
        rows.append(BenchRow(n, m, "subgraph_round", s // rounds))
    return rows


def loglog_slope(rows: list[BenchRow], phase: str) -> float | None:
    """Least-squares slope of log(time) against log(|E|) for one phase."""
    pts = [(r.edges, r.ns) for r in rows if r.phase == phase and r.edges > 0 and r.ns > 0]
    if len(pts) < 2:
        return None
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    return float(np.polyfit(x, y, 1)[0])
