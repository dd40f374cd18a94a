from escgraph.bench import PHASES, BenchRow, loglog_slope, run_bench


def test_rows_shape():
    rows = run_bench(sizes=(30, 60), rounds=1, repeats=1)
    assert [r.phase for r in rows] == list(PHASES) * 2
    assert all(r.ns > 0 for r in rows)
    assert rows[0].size == 30 and rows[3].size == 60


def test_empty():
    assert run_bench(sizes=()) == []
    assert loglog_slope([], "esc_round") is None


def test_slope_exact():
    rows = [BenchRow(n, m, "esc_round", 5 * m) for n, m in [(1, 100), (2, 200), (3, 400)]]
    assert abs(loglog_slope(rows, "esc_round") - 1.0) < 1e-9
