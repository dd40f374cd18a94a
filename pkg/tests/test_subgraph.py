import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from escgraph.errors import ArgumentError, BoundsError, UnsupportedError
from escgraph.graph import Graph, bfs_distances, complete_graph, cycle_graph, erdos_renyi, path_graph
from escgraph.subgraph import enumerate_tuples, khop_nodes, rooted_subgraph


def test_khop_examples(c6):
    assert khop_nodes(c6, (0,), 1) == {5, 0, 1}
    assert khop_nodes(c6, (0, 3), 1) == set(range(6))
    assert khop_nodes(path_graph(5), (0,), 0) == {0}


def test_khop_errors(c6):
    with pytest.raises(BoundsError):
        khop_nodes(c6, (7,), 1)
    with pytest.raises(ArgumentError):
        khop_nodes(c6, (0,), -1)


def test_square_example_local_graph(square_example):
    sub = rooted_subgraph(square_example, (0, 2), 2)
    assert sub.local.num_nodes == 4
    assert sub.local.degrees() == [2, 2, 2, 2]


def test_k5_whole_graph():
    sub = rooted_subgraph(complete_graph(5), (0, 1), 1)
    assert sub.local == complete_graph(5)


def test_path_neighbourhood():
    sub = rooted_subgraph(path_graph(5), (2,), 1)
    assert sub.to_parent == (2, 1, 3)
    assert sorted((sub.to_parent[a], sub.to_parent[b]) for a, b in sub.local.edges) == [(2, 1), (2, 3)]


def test_arity_limits(c6):
    with pytest.raises(UnsupportedError):
        rooted_subgraph(c6, (0, 1, 2), 1)
    with pytest.raises(ArgumentError):
        rooted_subgraph(c6, (1, 1), 1)


def test_enumerate_tuples():
    tri = complete_graph(3)
    assert len(list(enumerate_tuples(tri, "edges"))) == 6
    assert list(enumerate_tuples(tri, "nodes")) == [(0,), (1,), (2,)]
    assert len(list(enumerate_tuples(Graph.from_edges(3, []), "all_pairs"))) == 6
    assert list(enumerate_tuples(tri, "all-pairs")) == list(enumerate_tuples(tri, "all_pairs"))
    with pytest.raises(ArgumentError):
        list(enumerate_tuples(tri, "triples"))


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 14), st.floats(0.1, 0.6), st.integers(0, 9999), st.integers(0, 3))
def test_node_and_edge_sets(n, p, seed, h):
    g = erdos_renyi(n, p, seed)
    roots = (0, n - 1)
    sub = rooted_subgraph(g, roots, h)
    expected = {v for r in roots for v, d in enumerate(bfs_distances(g, r, h).dist) if d >= 0}
    assert set(sub.to_parent) == expected
    assert sub.to_parent[: len(roots)] == roots
    parent_edges = {(u, v) for u, v in g.edges if u in expected and v in expected}
    local_edges = {tuple(sorted((sub.to_parent[a], sub.to_parent[b]))) for a, b in sub.local.edges}
    assert local_edges == parent_edges
