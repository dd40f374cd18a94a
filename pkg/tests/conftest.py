import pytest

from escgraph.graph import Graph, cycle_graph


@pytest.fixture
def square_example() -> Graph:
    # 4-cycle v1-v2-v4-v3-v1 with v1..v4 -> 0..3
    return Graph.from_edges(4, [(0, 1), (1, 3), (2, 3), (0, 2)])


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line, _, _ in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
