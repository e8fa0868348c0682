from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given

from lapsigma.bounds import (BOUNDS, BoundReport, all_bounds, anderson_morley_upper,
                             avg_lt_delta2_plus1, compare_le_bounds, das_mu2_lower,
                             distinct_mu_characterization, le_upper_new, le_upper_old,
                             lemma31_check, li_pan_lower, merris_lower, mu2_avg_lower,
                             pan_hou_check, s_sigma_upper, third_smallest_upper)
from lapsigma.classify import in_exception_family_1mk1, in_exception_family_t2
from lapsigma.graph import (complement, complete, complete_bipartite, cycle, disjoint_union,
                            double_star, empty, join, path, star,
                            star_plus_isolated, two_cliques)
from lapsigma.graph6 import parse_graph6

from conftest import graphs, numpy_spectrum

R2 = math.sqrt(2)


def test_merris_examples():
    r = merris_lower(star(4))
    assert r.holds and r.equality and r.extremal_ok
    r = merris_lower(path(4))
    assert r.holds and not r.equality and r.extremal_ok and abs(r.lhs - (2 + R2)) < 1e-10
    assert not merris_lower(empty(4)).applicable


def test_anderson_morley_examples():
    r = anderson_morley_upper(cycle(4))
    assert r.holds and r.equality and r.rhs_exact == 4
    r = anderson_morley_upper(star(4))
    assert r.holds and r.equality and r.witness["delta_sum"] == 4
    r = anderson_morley_upper(path(4))
    assert r.holds and not r.equality and r.rhs == 4
    assert not anderson_morley_upper(empty(3)).applicable


def test_li_pan_examples():
    assert li_pan_lower(complete_bipartite(2, 3)).equality
    assert li_pan_lower(double_star(3, 3)).equality
    r = li_pan_lower(complete(4))
    assert r.holds and not r.equality


def test_li_pan_single_edge_graphs_fail():
    # K_2 plus isolated vertices: mu_2 = 0 while Delta_2 = 1
    for n in range(2, 8):
        r = li_pan_lower(disjoint_union(complete(2), empty(n - 2)) if n > 2 else complete(2))
        assert r.applicable and not r.holds


def test_das_examples():
    for G in (complete(3), complete(4), complete_bipartite(2, 3)):
        r = das_mu2_lower(G)
        assert r.applicable and r.holds and r.equality
    r = das_mu2_lower(complete(4))
    assert abs(r.rhs - 4) < 1e-12
    # outside the guard: recorded, not asserted
    r = das_mu2_lower(star(4))
    assert not r.applicable and r.witness["would_hold"] is False
    assert abs(r.witness["bound"] - 2) < 1e-12


def test_mu2_avg_examples():
    r = mu2_avg_lower(complete_bipartite(3, 3))
    assert r.holds and r.equality and r.witness["family"] == "K_{n/2,n/2}"
    assert not mu2_avg_lower(star_plus_isolated(5, 1)).applicable
    r = mu2_avg_lower(star_plus_isolated(6, 2))
    assert r.applicable and r.equality and r.rhs_exact == 1 and r.extremal_ok
    r = mu2_avg_lower(path(4))
    assert r.holds and not r.equality and r.rhs_exact == Fraction(3, 2)
    assert not mu2_avg_lower(complete(2)).applicable


def test_third_smallest_examples():
    r = third_smallest_upper(complete(4))
    assert r.equality and r.witness["family"] == "K_n"
    r = third_smallest_upper(two_cliques(4))
    assert r.equality and r.witness["family"] == "two_cliques"
    r = third_smallest_upper(path(4))
    assert r.holds and not r.equality and r.rhs_exact == Fraction(5, 2)


def test_le_examples():
    assert (le_upper_old(complete(4)).rhs_exact, le_upper_new(complete(4)).rhs_exact) == (14, 10)
    r = le_upper_new(cycle(4))
    assert r.holds and abs(r.lhs - 4) < 1e-10 and r.rhs_exact == 8
    # spectrum 5,1,1,1,0 about 8/5: LE = 17/5 + 9/5 + 8/5, meeting the bound exactly
    r = le_upper_old(star(5))
    assert r.holds and r.equality and abs(r.lhs - 6.8) < 1e-10 and r.rhs_exact == Fraction(34, 5)
    assert not le_upper_new(star(5)).applicable
    assert not le_upper_old(disjoint_union(complete(2), empty(3))).applicable


def test_compare_examples():
    r = compare_le_bounds(complete(4))
    assert r.holds and not r.equality and (r.lhs_exact, r.rhs_exact) == (10, 14)
    r = compare_le_bounds(two_cliques(4))       # m = n/2
    assert r.equality and r.extremal_ok
    r = compare_le_bounds(cycle(5))
    assert r.holds and r.rhs_exact - r.lhs_exact == 2


def test_s_sigma_examples():
    assert s_sigma_upper(complete(4)).equality
    r = s_sigma_upper(star(4))
    assert r.equality and r.witness["sigma"] == 1
    r = s_sigma_upper(path(4))
    assert r.holds and abs(r.lhs - (4 + R2)) < 1e-10 and r.rhs_exact == 6


def test_avg_delta2_examples():
    r = avg_lt_delta2_plus1(star(6))
    assert r.holds and r.equality and r.lhs_exact == Fraction(5, 3)
    r = avg_lt_delta2_plus1(complete(4))
    assert r.holds and r.equality
    r = avg_lt_delta2_plus1(double_star(3, 2))
    assert r.holds and (r.lhs_exact, r.rhs_exact) == (Fraction(8, 5), Fraction(11, 5))


def test_lemma31_examples():
    r = lemma31_check(star(6))
    assert r.applicable and r.holds and r.witness["k"] == 6
    assert not lemma31_check(complete(4)).applicable
    wheelish = join(complete(1), disjoint_union(complete(1), complete(3)))
    assert sorted(wheelish.degrees, reverse=True) == [4, 3, 3, 3, 1]
    assert not lemma31_check(wheelish).applicable


def test_pan_hou_examples():
    for G in (complete_bipartite(3, 3), double_star(3, 3), path(4)):
        r = pan_hou_check(G)
        assert r.applicable and r.holds, G
    assert not pan_hou_check(star(5)).applicable


def test_pan_hou_twin_counterexample():
    # K_{2,3}: mu_2 = Delta_2 = 3, but the two degree-3 vertices are
    # non-adjacent twins, so the common-neighbour and degree-sum conclusions fail
    r = pan_hou_check(parse_graph6("D]o"))
    assert r.applicable and not r.holds
    assert r.witness["parts"] == {"1": False, "2": True, "3": False}


def test_distinct_mu_examples():
    r = distinct_mu_characterization(complete(5))
    assert r.holds and r.equality and r.witness["family"] == "K_n"
    r = distinct_mu_characterization(complete_bipartite(2, 3))
    assert r.holds and not r.equality and abs(r.lhs - 1) < 1e-10
    r = distinct_mu_characterization(cycle(4))
    assert r.holds and r.equality and r.witness["family"] == "K_{n/2,n/2}"
    assert not distinct_mu_characterization(empty(3)).applicable


@given(graphs())
def test_reports_well_formed(G):
    for r in all_bounds(G):
        assert isinstance(r, BoundReport) and r.bound_id in BOUNDS
        if r.applicable:
            assert r.holds is not None
            if r.equality and r.bound_id not in ("pan_hou", "distinct_mu", "lemma31"):
                assert r.holds
        else:
            assert r.reason


@given(graphs(min_n=3, max_n=7))
def test_mu2_avg_against_numpy(G):
    r = mu2_avg_lower(G)
    if r.applicable:
        mu = numpy_spectrum(G)
        assert mu[1] >= 2 * G.m / G.n - 1e-9
        assert r.equality == (abs(mu[1] - 2 * G.m / G.n) < 1e-9)


@given(graphs(min_n=3, max_n=6))
def test_duality(G):
    if not in_exception_family_t2(G) and not in_exception_family_1mk1(G):
        assert third_smallest_upper(G).holds == mu2_avg_lower(complement(G)).holds
