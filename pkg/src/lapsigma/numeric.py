"""Floating-point Laplacian spectra and the inequalities that need actual
eigenvalue values: Laplacian energy, top-k sums and interlacing checks.

Eigenvalues come from a cyclic Jacobi iteration.  The reported error
bound is the final off-diagonal Frobenius norm (Weyl's inequality bounds
the distance between the diagonal and the true sorted spectrum by it)
plus a rounding allowance proportional to ``n * eps * ||A||_F`` per sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .exact import laplacian, sigma
from .graph import Graph, delete_edge

DEFAULT_TOL = 1e-8
JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
MAX_ORDER = 64

_EPS = np.finfo(float).eps


class ConvergenceError(ArithmeticError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps "
                         f"(off-diagonal norm {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]   # descending
    err: float

    def clamped(self) -> tuple[float, ...]:
        """Values with a near-zero smallest eigenvalue shown as 0 (display only)."""
        v = list(self.values)
        if v and abs(v[-1]) <= self.err:
            v[-1] = 0.0
        return tuple(v)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]


@dataclass(frozen=True)
class EnergyResult:
    le: float
    sigma_used: int
    identity_residual: float


def spectrum(M, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    a = np.array(M, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("spectrum needs a square matrix")
    n = a.shape[0]
    if n > MAX_ORDER:
        raise ValueError(f"matrix order {n} exceeds {MAX_ORDER}")
    asym = float(np.max(np.abs(a - a.T))) if n else 0.0
    if asym > tol:
        raise ValueError(f"matrix is not symmetric (max asymmetry {asym:.3e})")
    if n == 0:
        return Spectrum((), 0.0)
    a = (a + a.T) / 2
    norm = float(np.linalg.norm(a))
    # the stopping threshold cannot go below what rounding allows
    stop = max(tol, 8 * n * _EPS * norm)
    diag, off, sweeps = _kernels.jacobi_sweeps(a, stop, max_sweeps)
    if off < 0:
        raise ConvergenceError(-off, sweeps)
    err = off + 4 * n * _EPS * norm * (sweeps + 1)
    vals = np.sort(diag)[::-1]
    return Spectrum(tuple(float(x) for x in vals), float(err))


def laplacian_spectrum(G: Graph) -> Spectrum:
    s = G._memo.get("spectrum")
    if s is None:
        s = G._memo["spectrum"] = spectrum(laplacian(G))
    return s


def laplacian_energy(G: Graph, tol: float = DEFAULT_TOL) -> EnergyResult:
    spec = laplacian_spectrum(G)
    avg = 2 * G.m / G.n
    le = sum(abs(mu - avg) for mu in spec.values)
    s = sigma(G).sigma
    identity = 2 * sum(spec.values[:s]) - 4 * G.m * s / G.n
    return EnergyResult(le, s, abs(le - identity))


def sum_top(G: Graph, k: int, tol: float = DEFAULT_TOL) -> float:
    if not 1 <= k <= G.n:
        raise ValueError(f"k must lie in 1..{G.n}")
    return float(sum(laplacian_spectrum(G).values[:k]))


def _interlaces(big: tuple[float, ...], small: tuple[float, ...], tol: float) -> bool:
    # big_1 >= small_1 >= big_2 >= small_2 >= ... >= big_n >= small_n >= 0
    n = len(big)
    for i in range(n):
        if big[i] < small[i] - tol:
            return False
        if i + 1 < n and small[i] < big[i + 1] - tol:
            return False
    return small[-1] >= -tol


def check_edge_interlacing(G: Graph, u: int, v: int, tol: float = DEFAULT_TOL) -> bool:
    H = delete_edge(G, u, v)
    return _interlaces(laplacian_spectrum(G).values, spectrum(laplacian(H)).values, tol)


def check_cauchy_interlacing(M, k: int, tol: float = DEFAULT_TOL) -> bool:
    a = np.array(M, dtype=float)
    n = a.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    full = spectrum(a).values
    lead = spectrum(a[:k, :k]).values
    # lambda_{n-i+1}(B) <= lambda_{k-i+1}(B_k) <= lambda_{k-i+1}(B), i = 1..k
    for i in range(1, k + 1):
        sub = lead[k - i]
        if full[n - i] > sub + tol or sub > full[k - i] + tol:
            return False
    return True


def check_ky_fan(A, B, k: int, tol: float = DEFAULT_TOL) -> bool:
    a = np.array(A, dtype=float)
    b = np.array(B, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"order mismatch: {a.shape} vs {b.shape}")
    if not 1 <= k <= a.shape[0]:
        raise ValueError(f"k must lie in 1..{a.shape[0]}")
    lhs = sum(spectrum(a + b).values[:k])
    rhs = sum(spectrum(a).values[:k]) + sum(spectrum(b).values[:k])
    return lhs <= rhs + tol


def avg_degree(G: Graph) -> Fraction:
    return Fraction(2 * G.m, G.n)
