from fractions import Fraction

import pytest

import eigenstrata as es


def test_dimensions():
    assert es.dimension("2,1") == 4
    assert es.codimension((3, 1)) == 5
    assert es.multinomial("2,2") == 6
    assert es.parametrization_rank("2,2") == es.dimension("2,2")


def test_samples_are_exact():
    pts = es.sample((2, 1), count=2, seed=3)
    assert len(pts) == 2
    n, ambient = pts[0]
    assert n == 3 and len(ambient) == 6
    assert all(isinstance(x, Fraction) for x in ambient)
    assert es.sample("2,1", 2, 3) == pts


def test_vanishing_cubics():
    r = es.vanishing_forms("2,1", 3)
    assert r["nullspace_dim"] == 7
    assert r["mode"] == "exact"
    m = es.vanishing_forms("2,1", 3, mode="modular")
    assert [f["text"] for f in m["basis"]] == [f["text"] for f in r["basis"]]


def test_discriminant_2x2():
    assert es.discriminant(2) == "x11^2-2*x11*x22+4*x12^2+x22^2"


def test_hilbert_and_degree():
    assert es.hilbert_polynomial("2,1")["text"] == "3*t"
    assert [es.hilbert_function("2,1", t) for t in range(4)] == [1, 3, 6, 9]
    d = es.arrangement_degree("3,1")
    assert d["geometric_degree"] == d["formula_degree"] == 4


def test_distance():
    assert es.edd("2,1")["real_critical_count"] == 3
    r = es.nearest([[1, 0, 0], [0, 2, 0], [0, 0, 10]], "2,1")
    assert r["grouping"] == "12|3"
    assert r["squared_distance"] == pytest.approx(0.5)


def test_chevalley():
    t = es.chevalley("2,1", 6)
    assert t["all_match"]
    assert t["rows"][-1]["sn"] == 1


def test_suite_subset():
    r = es.run_suite([1, 4])
    assert r["ok"]
    assert [x["status"] for x in r["results"]] == ["PASS", "PASS"]


def test_errors():
    with pytest.raises(es.EigenstrataError):
        es.dimension("2,,1")
    with pytest.raises(es.EigenstrataError):
        es.nearest([[1, 2], [3]], "1,1")
