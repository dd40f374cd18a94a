"""Acceptance criteria 1-8.

Each criterion is a function returning ``(passed, detail)``. Under pytest
every criterion is one test and a pass/fail line per criterion is printed in
the terminal summary; ``python3 tests/test_acceptance.py`` prints the same
lines directly.
"""

import random
import sys
import time
from collections import Counter

import pytest

from escgraph.bench import loglog_slope, run_bench
from escgraph.counting import (
    Substructure,
    find_noncount_witness,
    graph_count_from_tuples,
    oracle_count,
    parse_substructure,
)
from escgraph.encoding import EncodingConfig, encode_all, structural_embedding, to_dense
from escgraph.graph import Graph, cycle_graph, erdos_renyi, named_graph, random_regular
from escgraph.subgraph import rooted_subgraph
from escgraph.wl import CfiSpec, cfi_graph, esc_distinguish, kwl_refine, wl_distinguish

RESULTS: list[tuple[int, str, bool, str]] = []

SQUARE_LABELS = {(0, 1, 1, 0): 1, (0, 1, 1, 2): 1, (1, 0, 2, 1): 1, (1, 2, 2, 1): 1}


def square_example() -> Graph:
    # v1..v4 -> 0..3, edges v1v2, v2v4, v3v4, v1v3
    return Graph.from_edges(4, [(0, 1), (1, 3), (2, 3), (0, 2)])


def criterion_1():
    enc = structural_embedding(square_example(), (0, 2), 2)
    degree = to_dense(enc.degree_hist, range(4))
    dist = to_dense(enc.root_dist_hists[0], range(4))
    ok = degree == [0, 0, 4, 0] and dist == [1, 2, 1, 0] and dict(enc.edge_label_hist) == SQUARE_LABELS
    return ok, f"degree={degree} dist={dist} labels={sorted(enc.edge_label_hist.items())}"


SUBGRAPH_SET = ["3-cycle", "4-cycle", "3-clique", "4-clique", "3-star", "4-star", "5-star", "6-star", "2-path", "3-path"]
INDUCED_SET = ["4-cycle", "4-clique", "4-star", "3-path"]


def _corpus():
    rng = random.Random(2024)
    ps = (0.1, 0.3, 0.5)
    return [erdos_renyi(rng.randint(4, 20), ps[i % 3], rng.randrange(10**9)) for i in range(200)]


def criterion_2():
    targets = [parse_substructure(t) for t in SUBGRAPH_SET] + [parse_substructure(t, "induced") for t in INDUCED_SET]
    mismatches = []
    for i, g in enumerate(_corpus()):
        edge_encs = encode_all(g, "edges", 1)
        pair_encs = encode_all(g, "all_pairs", 2)
        for s in targets:
            encs = pair_encs if s.kind == "path" else edge_encs
            cf = graph_count_from_tuples(g, s, 2 if s.kind == "path" else 1, encodings=encs).graph_total
            ref = oracle_count(g, s).graph_total
            if cf != ref:
                mismatches.append((i, s.name, cf, ref))
    return not mismatches, f"{len(targets)} structures x 200 graphs, mismatches={mismatches[:5]}"


def criterion_3():
    found = {}
    for text in ("5-cycle", "5-star[induced]"):
        w = find_noncount_witness(parse_substructure(text))
        found[text] = None if w is None else (w.count_a, w.count_b, w.graphs_tried)
    controls = {}
    for text in ("3-cycle", "4-clique"):
        controls[text] = find_noncount_witness(parse_substructure(text)) is None
    ok = all(v is not None for v in found.values()) and all(controls.values())
    return ok, f"witnesses={found} controls_clean={controls}"


def criterion_4():
    rook, shr = named_graph("rook4x4"), named_graph("shrikhande")
    a = not wl_distinguish(named_graph("two_triangles"), cycle_graph(6), 1)
    t0 = time.perf_counter()
    b = not wl_distinguish(rook, shr, 3)
    t3 = time.perf_counter() - t0
    c = esc_distinguish(rook, shr, 1)
    return a and b and c and t3 < 60, f"1-WL equal={a} 3-WL equal={b} ({t3:.2f}s) ESC distinguishes={c}"


def criterion_5():
    parts = []
    ok = True
    for k in (2, 3):
        g0, g1 = cfi_graph((k, 0)), cfi_graph((k, 1))
        n_ok = g0.num_nodes == g1.num_nodes == (k + 1) * 2 ** (k - 1) == CfiSpec(k, 0).num_nodes
        clique = Substructure("clique", k + 1)
        c0 = oracle_count(g0, clique).graph_total
        c1 = oracle_count(g1, clique).graph_total
        same = not wl_distinguish(g0, g1, k)
        ok &= n_ok and c0 > 0 and c1 == 0 and same
        parts.append(f"k={k}: n={g0.num_nodes} cliques {c0}/{c1} k-WL equal={same}")
    return ok, "; ".join(parts)


def criterion_6():
    n, r = 64, 3
    h = 4  # floor((1/2 + 0.1) * log(2n) / log(r - 1))
    cfg = EncodingConfig().for_arity(1)
    differ = 0
    for i in range(50):
        a = random_regular(n, r, 2 * i)
        b = random_regular(n, r, 2 * i + 1)
        ea = Counter(encode_all(a, "nodes", h, cfg).values())
        eb = Counter(encode_all(b, "nodes", h, cfg).values())
        differ += ea != eb
    return differ >= 48, f"{differ}/50 pairs differ (need >= 95%)"


def criterion_7():
    rows = run_bench(sizes=(100, 200, 400), mean_degree=10, h=1, rounds=3, repeats=5, seed=0)
    by = {(r.size, r.phase): r.ns for r in rows}
    faster = all(by[(n, "esc_round")] < by[(n, "subgraph_round")] for n in (100, 200, 400))
    slope = loglog_slope(rows, "esc_round")
    ok = faster and 0.8 <= slope <= 1.3
    ratios = [round(by[(n, "subgraph_round")] / by[(n, "esc_round")], 1) for n in (100, 200, 400)]
    return ok, f"esc faster at every size={faster} (ratios {ratios}) slope={slope:.3f}"


def criterion_8():
    rng = random.Random(8)
    failures = []
    for trial in range(100):
        n = rng.randint(5, 14)
        g = erdos_renyi(n, rng.uniform(0.15, 0.5), rng.randrange(10**9))
        perm = list(range(n))
        rng.shuffle(perm)
        pg = g.relabel(perm)
        h = rng.randint(1, 3)
        for u, v in g.edges:
            enc = structural_embedding(g, (u, v), h)
            if structural_embedding(pg, (perm[u], perm[v]), h) != enc:
                failures.append(("permutation", trial))
            if structural_embedding(g, (v, u), h) != enc.swap_roots():
                failures.append(("swap", trial))
            sub = rooted_subgraph(g, (u, v), h)
            if (
                sum(enc.degree_hist.values()) != sub.local.num_nodes
                or any(sum(d.values()) != sub.local.num_nodes for d in enc.root_dist_hists)
                or sum(enc.edge_label_hist.values()) != sub.local.num_edges
            ):
                failures.append(("mass", trial))
        if trial % 10 == 0:
            for text in ("3-cycle", "4-cycle", "4-star", "3-path"):
                if not oracle_count(g, parse_substructure(text), "tuple").check_divisibility():
                    failures.append(("divisibility", trial))
        if esc_distinguish(g, pg, h):
            failures.append(("esc", trial))
    return not failures, f"100 relabelings, failures={failures[:5]}"


CRITERIA = [
    (1, "worked-example golden encoding", criterion_1, 1),
    (2, "closed form equals oracle", criterion_2, 120),
    (3, "non-countability witnesses", criterion_3, 600),
    (4, "WL suite", criterion_4, 60),
    (5, "CFI suite", criterion_5, 120),
    (6, "regular-graph distinguishing", criterion_6, 120),
    (7, "efficiency direction", criterion_7, 300),
    (8, "invariance suite", criterion_8, 120),
]


def _run(number, title, fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < limit
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail} ({elapsed:.1f}s, limit {limit}s)"
    return ok, line


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, line = _run(number, title, fn, limit)
    RESULTS.append((number, line, ok, title))
    print(line)
    assert ok, line


if __name__ == "__main__":
    status = 0
    for number, title, fn, limit in CRITERIA:
        ok, line = _run(number, title, fn, limit)
        print(line, flush=True)
        status |= not ok
    sys.exit(status)
