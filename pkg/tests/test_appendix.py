from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from lapsigma.appendix import (_BUILDERS, _PRINTED, CLOSED_FORM_TOL, IDS, build_param_matrix, default_grid,
                               printed_charpoly, sweep, verify_param_matrix)
from lapsigma.exact import char_poly
from lapsigma.numeric import spectrum

a, b, x = sympy.symbols("a b x")


def test_build_examples():
    assert build_param_matrix("L3", 5, 3).entries == ((5, 0, 0), (0, 3, -1), (0, -1, 3))
    assert build_param_matrix("L1", 4, 2).entries == ((4, -1, -1), (-1, 2, -1), (-1, -1, 2))
    L4 = build_param_matrix("L4", 7, 2).entries
    assert L4[0] == (7, -1, -1, -1)
    assert [L4[i][i] for i in range(4)] == [7, 2, 1, 1]
    assert all(L4[i][j] == -1 for i in range(4) for j in range(4) if i != j)


@pytest.mark.parametrize("mid", IDS)
def test_orders(mid):
    d1, d2 = (9, 3) if mid not in ("L1", "L2", "L3") else (5, 3)
    assert build_param_matrix(mid, d1, d2).order == (3 if mid in ("L1", "L3") else 4)


@pytest.mark.parametrize("mid,d1,d2", [("L1", 3, 3), ("L2", 5, 1), ("L4", 6, 2),
                                       ("L9", 8, 3), ("L10", 9, 2)])
def test_parameter_rejections(mid, d1, d2):
    with pytest.raises(ValueError):
        build_param_matrix(mid, d1, d2)


def test_verify_examples():
    r = verify_param_matrix("L3", 5, 3)
    assert r.holds and all(abs(u - v) < CLOSED_FORM_TOL
                           for u, v in zip(r.witness["eigenvalues"], (5, 4, 2)))
    r = verify_param_matrix("L4", 7, 2)
    assert r.holds and r.witness["test_points"]["d2+1/2"] == Fraction(31, 16)
    assert r.lhs > 2.5
    r = verify_param_matrix("L5", 7, 2)
    assert r.holds and r.witness["test_points"]["d2+1"] == 0 and r.lhs >= 3 - 1e-10
    r = verify_param_matrix("L2", 4, 3)
    assert r.holds and r.witness["test_points"]["d2+1/3"] == Fraction(16, 81)


@pytest.mark.parametrize("mid", IDS)
def test_printed_polys_match_sympy_symbolically(mid):
    """Oracle: symbolic det(xI - L) in the two parameters against the printed forms."""
    M = sympy.Matrix(_BUILDERS[mid](a, b))
    cp = sympy.Poly(sympy.expand((x * sympy.eye(M.shape[0]) - M).det()), x)
    for d1, d2 in [(30, 4), (17, 5), (40, 10), (23, 2)]:
        coeffs = [int(c.subs({a: d1, b: d2})) for c in cp.all_coeffs()[::-1]]
        assert coeffs == list(printed_charpoly(mid, d1, d2).coeffs)
    if mid != "L3":
        printed = sum(c * x ** k for k, c in enumerate(_PRINTED[mid](a, b)))
        assert sympy.expand(cp.as_expr() - printed) == 0


@pytest.mark.parametrize("mid", IDS)
def test_exact_charpoly_matches_printed_grid(mid):
    for d1, d2 in default_grid(mid, 25, 6):
        assert char_poly(build_param_matrix(mid, d1, d2).entries) == printed_charpoly(mid, d1, d2)


def test_l5_mu2_at_least_d2_plus_1():
    for d1, d2 in default_grid("L5"):
        mu2 = spectrum(build_param_matrix("L5", d1, d2).entries).values[1]
        assert mu2 >= d2 + 1 - 1e-10


@pytest.mark.slow
def test_full_default_sweep():
    reports = sweep()
    assert len(reports) == sum(len(default_grid(m)) for m in IDS)
    bad = [(r.bound_id, r.witness["parts"]) for r in reports if not r.holds]
    assert not bad
