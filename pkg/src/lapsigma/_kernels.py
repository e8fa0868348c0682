"""Compiled inner loops.  Callers own input validation."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def jacobi_sweeps(a, tol, max_sweeps):
    """Cyclic Jacobi on a copy of symmetric ``a``.

    Returns (diagonal, off-diagonal Frobenius norm, sweeps used); the
    norm is negative when ``max_sweeps`` ran out before reaching ``tol``.
    """
    n = a.shape[0]
    a = a.copy()
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        off = np.sqrt(2.0 * off)
        if off < tol:
            return np.diag(a).copy(), off, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
    return np.diag(a).copy(), -off, max_sweeps


@njit(cache=True)
def faddeev_int64(m):
    """Characteristic polynomial coefficients (low degree first) in int64.

    Only call when :func:`int64_safe` holds; no overflow checks here.
    """
    n = m.shape[0]
    coeffs = np.zeros(n + 1, dtype=np.int64)
    coeffs[n] = 1
    mk = np.zeros((n, n), dtype=np.int64)
    c = np.int64(1)
    for k in range(1, n + 1):
        nxt = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                s = np.int64(0)
                for t in range(n):
                    s += m[i, t] * mk[t, j]
                nxt[i, j] = s
            nxt[i, i] += c
        mk = nxt
        tr = np.int64(0)
        for i in range(n):
            for t in range(n):
                tr += m[i, t] * mk[t, i]
        c = -(tr // k)
        coeffs[n - k] = c
    return coeffs


def int64_safe(rows: list[list[int]]) -> bool:
    """True when Faddeev-LeVerrier on this matrix cannot overflow int64.

    With rho the max absolute row sum, every intermediate is bounded by
    n * (2 rho)^n.
    """
    n = len(rows)
    rho = max((sum(abs(x) for x in r) for r in rows), default=0)
    return n * (2 * max(rho, 1)) ** n < 2 ** 62
