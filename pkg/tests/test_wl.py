import random

import networkx as nx
import pytest

from escgraph.counting import Substructure, oracle_count
from escgraph.errors import ArgumentError, ResourceError
from escgraph.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    erdos_renyi,
    from_edge_list,
    named_graph,
    path_graph,
    random_regular,
    to_edge_list,
)
from escgraph.wl import (
    CfiSpec,
    _split_histograms,
    cfi_graph,
    esc_distinguish,
    esc_refine,
    kwl_refine,
    wl1_refine,
    wl_distinguish,
)


def to_nx(g):
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.num_nodes))
    return h


class TestWl1:
    def test_two_triangles_vs_c6(self):
        assert not wl_distinguish(named_graph("two_triangles"), cycle_graph(6), 1)

    def test_k4_vs_c4(self):
        assert wl_distinguish(complete_graph(4), cycle_graph(4), 1)

    def test_rounds(self):
        assert wl1_refine(path_graph(4)).rounds == 2
        assert wl1_refine(cycle_graph(6)).rounds == 1

    def test_path_classes(self):
        part = wl1_refine(path_graph(4))
        assert part.classes() == [frozenset({0, 3}), frozenset({1, 2})]

    def test_class_counts_grow(self):
        part = wl1_refine(erdos_renyi(20, 0.2, 3))
        assert list(part.class_counts) == sorted(part.class_counts)

    @pytest.mark.parametrize("seed", range(20))
    def test_against_networkx_hash(self, seed):
        rng = random.Random(seed)
        g1 = random_regular(10, 3, rng.randrange(1000)) if seed % 2 else erdos_renyi(9, 0.35, seed)
        g2 = random_regular(10, 3, rng.randrange(1000)) if seed % 2 else erdos_renyi(9, 0.35, seed + 100)
        ours = wl_distinguish(g1, g2, 1)
        n = max(g1.num_nodes, g2.num_nodes)
        theirs = nx.weisfeiler_lehman_graph_hash(to_nx(g1), iterations=n) != nx.weisfeiler_lehman_graph_hash(
            to_nx(g2), iterations=n
        )
        assert ours == theirs


class TestKwl:
    def test_two_triangles_vs_c6_k2(self):
        part = kwl_refine(disjoint_union(named_graph("two_triangles"), cycle_graph(6)), 2)
        h1, h2 = _split_histograms(part, 6)
        assert h1 == h2

    def test_rook_shrikhande_k3(self):
        assert not wl_distinguish(named_graph("rook4x4"), named_graph("shrikhande"), 3)

    def test_k3_separates_triangles(self):
        assert wl_distinguish(named_graph("two_triangles"), cycle_graph(6), 3)

    def test_bad_k(self):
        with pytest.raises(ArgumentError):
            kwl_refine(cycle_graph(4), 4)

    def test_budget(self):
        with pytest.raises(ResourceError):
            kwl_refine(cycle_graph(30), 3, budget=1000)

    def test_colours_depend_only_on_history(self):
        g = erdos_renyi(8, 0.4, 1)
        perm = [7, 2, 5, 0, 3, 1, 6, 4]
        a = kwl_refine(g, 2)
        b = kwl_refine(g.relabel(perm), 2)
        assert a.histogram == b.histogram

    def test_two_wl_matches_one_wl(self):
        rng = random.Random(0)
        for _ in range(50):
            n = rng.randint(5, 9)
            g1 = erdos_renyi(n, rng.uniform(0.2, 0.6), rng.randrange(10**6))
            g2 = erdos_renyi(n, rng.uniform(0.2, 0.6), rng.randrange(10**6))
            if rng.random() < 0.4:
                g2 = random_regular(n + n % 2, 2, rng.randrange(1000))
                g1 = random_regular(n + n % 2, 2, rng.randrange(1000))
            assert wl_distinguish(g1, g2, 2) == wl_distinguish(g1, g2, 1)


class TestCfi:
    @pytest.mark.parametrize("k,ell,n", [(2, 0, 6), (2, 1, 6), (3, 0, 16), (3, 1, 16)])
    def test_node_counts(self, k, ell, n):
        assert cfi_graph((k, ell)).num_nodes == n == CfiSpec(k, ell).num_nodes

    @pytest.mark.parametrize("k", [2, 3])
    def test_clique_parity(self, k):
        clique = Substructure("clique", k + 1)
        assert oracle_count(cfi_graph((k, 0)), clique).graph_total > 0
        assert oracle_count(cfi_graph((k, 1)), clique).graph_total == 0

    @pytest.mark.parametrize("k", [2, 3])
    def test_kwl_equivalent(self, k):
        assert not wl_distinguish(cfi_graph((k, 0)), cfi_graph((k, 1)), k)

    def test_small_members(self):
        assert nx.is_isomorphic(to_nx(cfi_graph((2, 0))), to_nx(named_graph("two_triangles")))
        assert nx.is_isomorphic(to_nx(cfi_graph((2, 1))), to_nx(cycle_graph(6)))
        assert nx.is_isomorphic(to_nx(cfi_graph((3, 0))), to_nx(named_graph("rook4x4")))
        assert nx.is_isomorphic(to_nx(cfi_graph((3, 1))), to_nx(named_graph("shrikhande")))

    def test_parity_classes(self):
        hist = {ell: kwl_refine(cfi_graph((3, ell)), 3).histogram for ell in range(4)}
        assert hist[0] == hist[2] and hist[1] == hist[3]
        assert nx.is_isomorphic(to_nx(cfi_graph((3, 0))), to_nx(cfi_graph((3, 2))))
        assert nx.is_isomorphic(to_nx(cfi_graph((3, 1))), to_nx(cfi_graph((3, 3))))

    @pytest.mark.parametrize("k,ell", [(1, 0), (2, 4), (2, -1)])
    def test_bad_spec(self, k, ell):
        with pytest.raises(ArgumentError):
            CfiSpec(k, ell)

    def test_size_limit(self):
        with pytest.raises(ResourceError):
            cfi_graph((12, 0), max_nodes=1000)

    def test_round_trip(self):
        g = cfi_graph((3, 1))
        assert from_edge_list(to_edge_list(g)) == g


class TestEsc:
    def test_rook_vs_shrikhande(self):
        assert esc_distinguish(named_graph("rook4x4"), named_graph("shrikhande"), 1)
        assert esc_distinguish(named_graph("rook4x4"), named_graph("shrikhande"), 1, use_message_passing=False)

    def test_toy_pair(self):
        # 4-cycle plus an edge against the 6-node path
        a = from_edge_list("0 1\n1 2\n2 3\n3 0\n4 5")
        b = path_graph(6)
        assert not esc_distinguish(a, b, 1, use_message_passing=False, policy="nodes")
        assert esc_distinguish(a, b, 1, use_message_passing=True, policy="nodes")
        assert esc_distinguish(a, b, 1, use_message_passing=False)

    def test_bad_policy(self):
        with pytest.raises(ArgumentError):
            esc_distinguish(cycle_graph(4), cycle_graph(4), 1, policy="all_pairs")

    def test_relabel_invariance(self):
        g = erdos_renyi(14, 0.3, 9)
        rng = random.Random(1)
        for _ in range(10):
            perm = list(range(14))
            rng.shuffle(perm)
            assert not esc_distinguish(g, g.relabel(perm), 2)
            assert esc_refine(g, 2) == esc_refine(g.relabel(perm), 2)

    def test_at_least_wl1(self):
        for seed in range(10):
            g1, g2 = erdos_renyi(9, 0.4, seed), erdos_renyi(9, 0.4, seed + 50)
            if wl_distinguish(g1, g2, 1):
                assert esc_distinguish(g1, g2, 1)
