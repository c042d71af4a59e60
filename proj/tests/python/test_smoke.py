"""Smoke tests for the accdom python module (vertex lists are 0-indexed)."""

import json

import accdom


def test_family_and_counts():
    p7 = accdom.family("path:7")
    assert p7.n == 7
    assert p7.edge_count == 6
    assert accdom.count_accurate(p7, 4) == 22
    assert accdom.count_dominating(accdom.family("path:4"), 2) == 4


def test_enumerate_matches_remark():
    p6 = accdom.family("path:6")
    sets = accdom.enumerate_accurate(p6, 3)
    assert [[v + 1 for v in s] for s in sets] == [[1, 2, 5], [2, 5, 6]]


def test_c10_witness():
    c10 = accdom.family("cycle:10")
    assert accdom.count_accurate(c10, 5) == 30
    assert accdom.count_accurate(accdom.family("cycle:9"), 3) == 0


def test_polynomials_and_gamma():
    assert accdom.accurate_polynomial(accdom.family("corona:complete:2")) == [0, 0, 0, 4, 1]
    assert accdom.domination_polynomial(accdom.family("path:3")) == [0, 1, 3, 1]
    assert accdom.gamma(accdom.family("path:5")) == 2
    assert accdom.gamma_a(accdom.family("cycle:6")) == 4
    assert accdom.gamma_a_closed("friendship:3") == 1


def test_build_graph_and_errors():
    import pytest

    g = accdom.build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert g.n == 5
    assert g.neighbors(2) == [1, 3]
    assert g.degree_sequence() == [1, 1, 2, 2, 2]
    with pytest.raises(ValueError):
        accdom.build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        accdom.family("wheel:5")
    corona = accdom.corona_k1(accdom.build_graph(2, [(0, 1)]))
    assert sorted(corona.edges()) == [(0, 1), (0, 2), (1, 3)]


def test_membership_and_min_within():
    p5 = accdom.family("path:5")
    assert accdom.is_dominating(p5, [1, 3])
    assert accdom.is_accurate(p5, [1, 3])
    assert not accdom.is_accurate(p5, [0, 3])
    assert accdom.min_dominating_within(p5, [0, 2, 4]) == 3
    assert accdom.min_dominating_within(p5, [0]) is None


def test_closed_forms_are_arbitrary_precision():
    assert accdom.corona_count(2, 3) == 4
    assert accdom.llano_path_count(5, 2) == 3
    # C(2^7, 64) does not fit in 64 bits
    big = accdom.llano_cycle_count(3, 1, "sum")
    assert big == 1
    assert accdom.corona_polynomial(40, corrected=True)[41] == 40 * 2 ** 39


def test_workers_are_invariant():
    p12 = accdom.family("path:12")
    assert accdom.count_accurate(p12, 5, workers=4) == accdom.count_accurate(p12, 5)


def test_audit_report_json():
    report = json.loads(accdom.audit_bound_json("path_upper", 6, 12))
    assert report["subject"] == "path_upper"
    assert report["summary"]["violation"] == 0
    assert report["clean"] is True
    report = json.loads(accdom.audit_formula_json("corona_poly_printed", 1, 3))
    assert report["clean"] is True
    assert [2, 2] in report["expected_violations"]


def test_capacity_guard():
    import pytest

    with pytest.raises(RuntimeError):
        accdom.count_accurate(accdom.family("path:23"), 3)
