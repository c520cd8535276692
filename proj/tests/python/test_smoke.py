"""Smoke tests for the fano4py bindings."""

import fano4py


def test_hilbert_quintic():
    h = fano4py.hilbert_series("ci", ambient=[1] * 6, degrees=[5], order=2)
    assert h == [1, 6, 21]


def test_analyze_pfaffian():
    rep = fano4py.analyze("gr25", ambient=[1] * 8, a2=[1, 1, 1, 1, 3])
    assert rep["K4"] == 13
    assert rep["h0"][1] == 8
    assert rep["c2K2"] == 58
    assert rep["rr_consistent"]
    assert rep["index"] == 1
    assert rep["verdict"] == "SMOOTH_CANDIDATE"


def test_tables_match():
    for row in fano4py.table1() + fano4py.table2():
        assert row["matches"], row["label"]
    assert len(fano4py.table1()) == 10
    assert len(fano4py.table2()) == 13


def test_geography_window():
    points = fano4py.geography()
    assert len(points) == 25
    assert all(1 <= p["K4"] <= 17 and 3 <= p["h0"] <= 9 for p in points)


def test_small_search():
    out = fano4py.search(families=["ci"], max_equation_degree=6,
                         ci_max_codim=1, max_ambient_weight=2)
    stats = out[-1]
    records = out[:-1]
    assert stats["emitted"] == len(records)
    assert any(r["eq_degrees"] == [5] and r["ambient"] == [1] * 6 for r in records)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("smoke: all tests pass")
