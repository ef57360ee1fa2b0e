"""Smoke tests for the compiled module: thin checks that the bindings wire
through to the core correctly; the numerical depth lives in the C++ suites."""

import math

import pytest

import isocolloc as ic


def test_open_uniform_knots():
    knots = ic.open_uniform_knots(3, 3)
    assert knots == pytest.approx([0, 0, 0, 0, 1 / 3, 2 / 3, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        ic.open_uniform_knots(0, 3)


def test_partition_of_unity():
    for x in (0.0, 0.123, 0.5, 0.999, 1.0):
        first, table = ic.basis_values(8, 4, x, max_order=1)
        assert first >= 0
        assert sum(table[0]) == pytest.approx(1.0, abs=1e-12)
        assert sum(table[1]) == pytest.approx(0.0, abs=1e-8)


def test_greville_and_superconvergent_points():
    gre = ic.greville_points(3, 3)
    assert gre == pytest.approx([0, 1 / 9, 1 / 3, 2 / 3, 8 / 9, 1])
    sp = ic.superconvergent_points(10, 3)
    assert len(sp) == 20
    assert all(b > a for a, b in zip(sp, sp[1:]))


def test_collocation_point_counts():
    gp = ic.collocation_points("gp", 8, 3)
    assert gp["equations"] == 8 + 3 - 2
    csp = ic.collocation_points("csp", 8, 3)
    assert csp["equations"] == 8 + 3 - 2
    sym = ic.collocation_points("csp-sym", 8, 3)
    assert sym["equations"] == 8 + 3 - 2
    assert len(sym["points"]) == sym["equations"] + 1
    assert len(sym["averaging_groups"]) == 1
    with pytest.raises(ValueError):
        ic.collocation_points("csp", 8, 4)  # even degree unsupported


def test_problem_registry():
    names = ic.problems()
    assert "p1-dirichlet" in names
    assert len(names) == 5


def test_single_solve_errors():
    report = ic.solve_errors("p1-dirichlet", "csp", 3, 32)
    assert report["L2"] < 1e-5
    assert report["L2"] <= report["H1"]


def test_convergence_study_orders():
    study = ic.convergence_study("p1-dirichlet", "csp", 3, [8, 16, 32])
    assert study["tail_order_L2"] == pytest.approx(4.0, abs=0.15)
    l2 = [lvl["L2"] for lvl in study["levels"]]
    assert l2[2] < l2[1] < l2[0]


def test_residual_samples():
    data = ic.residual_samples("p1-dirichlet", 3, 10)
    assert len(data["x"]) == 2000 + 20
    assert sum(data["is_surrogate_point"]) == 20
    peak = max(abs(r) for r in data["residual"])
    assert 1e-3 < peak < 1.0  # second-derivative scale residual at n_el=10
