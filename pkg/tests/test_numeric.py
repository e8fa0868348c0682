from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from lapsigma.appendix import build_param_matrix
from lapsigma.exact import laplacian, sigma
from lapsigma.graph import (complement, complete, cycle, delete_edge, empty,
                            from_edges, path, star)
from lapsigma.numeric import (ConvergenceError, Spectrum, check_cauchy_interlacing,
                              check_edge_interlacing, check_ky_fan, laplacian_energy,
                              laplacian_spectrum, spectrum, sum_top)

from conftest import graphs, numpy_spectrum

R2 = math.sqrt(2)


def _close(a, b, tol=1e-10):
    return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))


def test_spectrum_examples():
    assert _close(spectrum(laplacian(complete(2))).clamped(), (2, 0))
    assert _close(spectrum(laplacian(star(4))).values, (4, 1, 1, 0))
    assert _close(spectrum(laplacian(path(4))).values, (2 + R2, 2, 2 - R2, 0))


def test_spectrum_rejections():
    with pytest.raises(ValueError, match="symmetric"):
        spectrum([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        spectrum(np.zeros((65, 65)))
    with pytest.raises(ConvergenceError):
        spectrum(_sym(12), max_sweeps=1)


def _sym(n):
    a = np.random.default_rng(1).standard_normal((n, n))
    return a + a.T


def test_clamped_is_cosmetic():
    s = Spectrum((2.0, 1e-15), 1e-12)
    assert s.clamped() == (2.0, 0.0) and s.values[1] == 1e-15


def test_energy_examples():
    assert abs(laplacian_energy(complete(4)).le - 6) <= 1e-10
    assert laplacian_energy(empty(5)).le == 0
    r = laplacian_energy(path(4))
    assert abs(r.le - (2 + 2 * R2)) <= 1e-10 and r.sigma_used == 2
    assert r.identity_residual <= 1e-10
    assert laplacian_energy(empty(1)).le == 0


def test_sum_top_examples():
    assert abs(sum_top(complete(3), 2) - 6) <= 1e-10
    assert abs(sum_top(star(4), 1) - 4) <= 1e-10
    with pytest.raises(ValueError):
        sum_top(star(4), 0)


def test_edge_interlacing_examples():
    assert check_edge_interlacing(complete(3), 0, 1)
    assert check_edge_interlacing(complete(2), 0, 1)
    assert check_edge_interlacing(cycle(4), 0, 1)
    with pytest.raises(ValueError):
        check_edge_interlacing(path(3), 0, 2)


def test_cauchy_examples():
    L = laplacian(complete(3))
    assert check_cauchy_interlacing(L, 2)
    assert check_cauchy_interlacing(L, 3)
    assert check_cauchy_interlacing(build_param_matrix("L3", 5, 3).entries, 2)


def test_ky_fan_examples():
    K2 = laplacian(complete(2))
    assert check_ky_fan(K2, K2, 1)
    a = laplacian(from_edges(3, [(0, 1)]))
    b = laplacian(from_edges(3, [(1, 2)]))
    assert check_ky_fan(a, b, 1)
    star_part = laplacian(from_edges(3, [(0, 1), (0, 2)]))
    rest = laplacian(from_edges(3, [(1, 2)]))
    assert check_ky_fan(star_part, rest, 2)
    with pytest.raises(ValueError):
        check_ky_fan(K2, laplacian(complete(3)), 1)


def test_checks_can_fail():
    # a negative tolerance demands strict slack, which equality cases lack
    K2 = laplacian(complete(2))
    assert not check_ky_fan(K2, K2, 1, tol=-1e-6)
    assert not check_cauchy_interlacing(laplacian(complete(3)), 2, tol=-1e-6)


@given(graphs())
def test_spectrum_matches_numpy(G):
    s = laplacian_spectrum(G)
    assert _close(s.values, tuple(numpy_spectrum(G)), 1e-9)
    assert abs(sum(s.values) - 2 * G.m) <= G.n * s.err + 1e-9
    assert s.values[-1] >= -s.err - 1e-12 and s.values[0] <= G.n + s.err + 1e-12


@given(graphs())
def test_energy_identity(G):
    r = laplacian_energy(G)
    assert r.identity_residual <= 1e-8
    assert r.sigma_used == sigma(G).sigma


@given(graphs(min_n=2, max_n=6))
def test_complement_spectrum_pairing(G):
    n = G.n
    mu = laplacian_spectrum(G).values
    paired = sorted([n - m for m in mu[:-1]] + [0.0], reverse=True)
    assert _close(paired, laplacian_spectrum(complement(G)).values, 1e-8)


@given(graphs(max_n=6), st.data())
def test_edge_interlacing_random_edge(G, data):
    edges = [(i, j) for i in range(G.n) for j in range(i + 1, G.n) if G.has_edge(i, j)]
    if edges:
        u, v = data.draw(st.sampled_from(edges))
        assert check_edge_interlacing(G, u, v)
        assert delete_edge(G, u, v).m == G.m - 1


@given(graphs(max_n=5), st.data())
def test_cauchy_random_k(G, data):
    k = data.draw(st.integers(1, G.n))
    assert check_cauchy_interlacing(laplacian(G), k)
