import math

import pytest

import polar_jacobi as pj

SQRT6 = math.sqrt(6.0)


def test_legendre():
    assert pj.jacobi_poly(0, 0, 2) == pytest.approx([-1 / 3, 0, 1])
    assert pj.squared_norm(0, 0, 0) == pytest.approx(2.0)


def test_double_root():
    xi = (1 + 2 * SQRT6) / 5
    root = (1 - SQRT6) / 5
    for method in ("recurrence", "divdiff"):
        c = pj.polar_poly(0, 1, xi, 2, method=method)
        assert c == pytest.approx([root * root, -2 * root, 1], abs=1e-12)
    zeros = pj.find_roots(pj.polar_poly(0, 1, xi, 2))
    assert len(zeros["roots"]) == 1
    assert zeros["roots"][0]["mult"] == 2
    assert abs(zeros["roots"][0]["z"] - root) < 1e-8


def test_recurrence_coefficients():
    a, b = pj.polar_recurrence_coeffs(0.8, 0.8, 3)
    assert a == 0
    assert b == pytest.approx(-4 * (1.6 + 2) / ((1.6 + 5) * (1.6 + 7)))


def test_figure_one_disk():
    z = pj.polar_roots(0.5, 2, 3, 30)
    assert sum(r["mult"] for r in z["roots"]) == 30
    assert z["disk_radius"] == 5
    assert z["max_excess"] <= 1e-8 * 6


def test_complex_parameters():
    v = pj.jacobi_eval(0.5 + 1j, -0.3, 6, 2 - 1j)
    assert v == pytest.approx(-102.8254858098844666834165 - 46.53952212329775368017708j, rel=1e-12)
    assert pj.operator_identity_residual(-0.5 + 1j, -1.45 - 0.5j, 1j, 5) < 1e-10


def test_errors():
    with pytest.raises(pj.DegreeZero):
        pj.find_roots([3.0])
    with pytest.raises(pj.RegimeError):
        pj.moments(-1.5, 0, 4)
    with pytest.raises(pj.Error):
        pj.polar_poly(0, 0, 1, 3, method="companion")


def test_verify_user_spec():
    report = pj.verify(alpha=-4, beta=1, xi=1, n=5)
    assert report["multiplicity_audit"]["status"] == "not_applicable"
    assert all(s["status"] != "fail" for s in report.values())
