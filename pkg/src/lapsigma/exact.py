"""Exact Laplacian spectral data: characteristic polynomials, eigenvalue
counts against rational thresholds, and the sigma invariant.

Two exact counting routes exist (see :mod:`lapsigma.poly`).  Graph-level
functions use the Descartes route on the characteristic polynomial of the
integer matrix ``b*L - a*I`` (the threshold ``a/b`` cleared to integers),
which reads off its inertia directly.  The Sturm route is the independent
cross-check and the default of :func:`count_roots_cmp`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .graph import Graph
from .poly import IntPolynomial, RootCounts, count_roots_cmp, root_counts

__all__ = [
    "IntPolynomial", "SigmaResult", "char_poly", "count_roots_cmp", "inertia",
    "laplacian", "laplacian_charpoly", "laplacian_counts", "m_interval",
    "multiplicity_at", "sigma", "MATRIX_ORDER_CAP",
]

MATRIX_ORDER_CAP = 16

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SigmaResult:
    sigma: int
    tie: bool
    counts: RootCounts   # eigenvalues above, equal to, below 2m/n


def laplacian(G: Graph) -> IntMatrix:
    L = G._memo.get("laplacian")
    if L is None:
        deg = G.degrees
        L = tuple(
            tuple(deg[i] if i == j else -(G.rows[i] >> j & 1) for j in range(G.n))
            for i in range(G.n)
        )
        G._memo["laplacian"] = L
    return L


def _faddeev_python(M: Sequence[Sequence[int]]) -> list[int]:
    n = len(M)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        cols = list(zip(*mk))
        mk = [[sum(a * b for a, b in zip(M[i], col)) for col in cols] for i in range(n)]
        for i in range(n):
            mk[i][i] += c
        cols = list(zip(*mk))
        tr = sum(sum(a * b for a, b in zip(M[i], cols[i])) for i in range(n))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible by step index")
        c = -(tr // k)
        coeffs[n - k] = c
    return coeffs


def char_poly(M: Sequence[Sequence[int]], cap: int = MATRIX_ORDER_CAP) -> IntPolynomial:
    """det(xI - M) for an integer square matrix, via Faddeev-LeVerrier."""
    rows = [[int(x) for x in r] for r in M]
    n = len(rows)
    if n > cap:
        raise ValueError(f"matrix order {n} exceeds the cap of {cap}")
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return IntPolynomial([1])
    if _kernels.int64_safe(rows):
        coeffs = _kernels.faddeev_int64(np.array(rows, dtype=np.int64)).tolist()
    else:
        coeffs = _faddeev_python(rows)
    return IntPolynomial(coeffs)


def laplacian_charpoly(G: Graph) -> IntPolynomial:
    p = G._memo.get("charpoly")
    if p is None:
        p = G._memo["charpoly"] = char_poly(laplacian(G))
    return p


def laplacian_counts(G: Graph, q, method: str = "descartes") -> RootCounts:
    """Laplacian eigenvalues of G above / at / below the rational q."""
    q = Fraction(q)
    key = ("counts", q, method)
    c = G._memo.get(key)
    if c is None:
        c = G._memo[key] = root_counts(laplacian_charpoly(G), q, method)
    return c


def inertia(M: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(#positive, #zero, #negative) eigenvalues of an integer symmetric matrix."""
    c = root_counts(char_poly(M), 0, "descartes")
    return c.above, c.at, c.below


def sigma(G: Graph, method: str = "descartes") -> SigmaResult:
    """Largest i with mu_i >= 2m/n, decided exactly."""
    counts = laplacian_counts(G, Fraction(2 * G.m, G.n), method)
    return SigmaResult(counts.above + counts.at, counts.at > 0, counts)


def m_interval(G: Graph, lo, hi, closed_lo: bool = True, closed_hi: bool = True,
               method: str = "descartes") -> int:
    """Number of Laplacian eigenvalues in the interval between lo and hi."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("interval needs lo <= hi")
    c_lo = laplacian_counts(G, lo, method)
    c_hi = laplacian_counts(G, hi, method)
    from_lo = c_lo.above + (c_lo.at if closed_lo else 0)
    past_hi = c_hi.above + (0 if closed_hi else c_hi.at)
    return max(from_lo - past_hi, 0)


def multiplicity_at(G: Graph, q, method: str = "descartes") -> int:
    return laplacian_counts(G, q, method).at


def nth_eigenvalue_cmp(G: Graph, i: int, q) -> int:
    """Sign of mu_i - q (1-based, descending order), decided exactly."""
    c = laplacian_counts(G, q)
    if c.above >= i:
        return 1
    if c.above + c.at >= i:
        return 0
    return -1
