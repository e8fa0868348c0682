"""Evaluators for the eigenvalue inequalities, one :class:`BoundReport` each.

Applicability is part of the result, never an exception, so a sweep over
every graph yields a row per bound.  Whenever the comparand is rational the
decision is exact (eigenvalue position tests on the characteristic
polynomial); the numeric spectrum is only used for irrational comparands
and for the displayed left-hand sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import classify
from .exact import laplacian_counts, nth_eigenvalue_cmp, sigma
from .graph import Graph, common_neighbors, degree_stats, is_connected
from .numeric import DEFAULT_TOL, laplacian_energy, laplacian_spectrum, sum_top


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    applicable: bool
    reason: str = ""
    lhs: float | None = None
    rhs: float | None = None
    lhs_exact: Fraction | None = None
    rhs_exact: Fraction | None = None
    holds: bool | None = None
    equality: bool | None = None
    # the equality characterisation agrees with the structure (None: not asserted)
    extremal_ok: bool | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True when applicable and every asserted conclusion holds."""
        return bool(self.applicable and self.holds and self.extremal_ok is not False)


def _na(bound_id: str, reason: str, **witness) -> BoundReport:
    return BoundReport(bound_id, False, reason, witness=witness)


def _f(q) -> float:
    return float(q)


def _eig(G: Graph, i: int) -> float:
    """Numeric mu_i (1-based, descending)."""
    return laplacian_spectrum(G).values[i - 1]


def _connected(G: Graph) -> bool:
    c = G._memo.get("connected")
    if c is None:
        c = G._memo["connected"] = is_connected(G)
    return c


def _stats(G: Graph):
    s = G._memo.get("stats")
    if s is None:
        s = G._memo["stats"] = degree_stats(G)
    return s


def _in_family(G: Graph) -> bool:
    f = G._memo.get("family_1mk1")
    if f is None:
        f = G._memo["family_1mk1"] = classify.in_exception_family_1mk1(G)
    return f


def merris_lower(G: Graph) -> BoundReport:
    bid = "merris"
    if G.m == 0:
        return _na(bid, "needs at least one edge")
    d1 = _stats(G).delta1
    cmp = nth_eigenvalue_cmp(G, 1, d1 + 1)
    eq = cmp == 0
    ext = eq == (d1 == G.n - 1) if _connected(G) else None
    return BoundReport(bid, True, lhs=_eig(G, 1), rhs=d1 + 1.0, rhs_exact=Fraction(d1 + 1),
                       holds=cmp >= 0, equality=eq, extremal_ok=ext)


def anderson_morley_upper(G: Graph) -> BoundReport:
    bid = "anderson_morley"
    if G.m == 0:
        return _na(bid, "needs at least one edge")
    deg = G.degrees
    best, edge = max((deg[u] + deg[v], (u, v)) for u, v in G.edges())
    st = _stats(G)
    cmp = nth_eigenvalue_cmp(G, 1, best)
    return BoundReport(bid, True, lhs=_eig(G, 1), rhs=float(best), rhs_exact=Fraction(best),
                       holds=cmp <= 0 and best <= st.delta1 + st.delta2, equality=cmp == 0,
                       witness={"edge": edge, "delta_sum": st.delta1 + st.delta2})


def li_pan_lower(G: Graph) -> BoundReport:
    bid = "li_pan"
    if G.n < 2:
        return _na(bid, "needs n >= 2")
    d2 = _stats(G).delta2
    cmp = nth_eigenvalue_cmp(G, 2, d2)
    return BoundReport(bid, True, lhs=_eig(G, 2), rhs=float(d2), rhs_exact=Fraction(d2),
                       holds=cmp >= 0, equality=cmp == 0)


def _das_value(G: Graph, u: int, w: int, d2: int) -> float:
    c = common_neighbors(G, u, w)
    if G.has_edge(u, w):
        return (d2 + 2 + math.sqrt((d2 - 2) ** 2 + 4 * c)) / 2
    return (d2 + 1 + math.sqrt((d2 + 1) ** 2 - 4 * c)) / 2


def das_mu2_lower(G: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    """Two-vertex mu_2 lower bound, maximised over every valid (v1, v2) choice.

    Applied only to connected graphs with n >= 3 and Delta_2 >= 2; outside
    that guard the value is still evaluated and recorded in the witness as a
    finding, but nothing is asserted.
    """
    bid = "das"
    if G.n < 2 or G.m == 0:
        return _na(bid, "needs n >= 2 and an edge")
    st = _stats(G)
    deg = G.degrees
    tops = [u for u in range(G.n) if deg[u] == st.delta1]
    seconds = [w for w in range(G.n) if deg[w] == st.delta2]
    best, pair = max((_das_value(G, u, w, st.delta2), (u, w))
                     for u in tops for w in seconds if u != w)
    mu2 = _eig(G, 2)
    holds = mu2 >= best - tol
    witness = {"pair": pair, "adjacent": G.has_edge(*pair),
               "common": common_neighbors(G, *pair)}
    if G.n < 3 or not _connected(G) or st.delta2 < 2:
        return _na(bid, "guard: needs connected, n >= 3, Delta_2 >= 2",
                   bound=best, mu2=mu2, would_hold=holds, **witness)
    return BoundReport(bid, True, lhs=mu2, rhs=best, holds=holds,
                       equality=abs(mu2 - best) <= tol, witness=witness)


def mu2_avg_lower(G: Graph) -> BoundReport:
    """mu_2 >= 2m/n outside the star-plus-isolated family, with equality classes."""
    bid = "mu2_avg"
    if G.n <= 2:
        return _na(bid, "needs n > 2")
    if _in_family(G):
        return _na(bid, "graph lies in the excluded star-plus-isolated family")
    avg = Fraction(2 * G.m, G.n)
    cmp = nth_eigenvalue_cmp(G, 2, avg)
    fam = classify.recognize_mu2_equality_family(G)
    eq = cmp == 0
    return BoundReport(bid, True, lhs=_eig(G, 2), rhs=_f(avg), rhs_exact=avg,
                       holds=cmp >= 0, equality=eq, extremal_ok=eq == bool(fam),
                       witness={"family": fam.family, "params": fam.params} if fam else {})


def third_smallest_upper(G: Graph) -> BoundReport:
    """mu_{n-2} <= 2m/n + 1 outside the complementary family, with equality classes."""
    bid = "mu_n2_upper"
    if G.n < 3:
        return _na(bid, "needs n >= 3")
    if classify.in_exception_family_t2(G):
        return _na(bid, "graph lies in the excluded complementary family")
    t = Fraction(2 * G.m, G.n) + 1
    cmp = nth_eigenvalue_cmp(G, G.n - 2, t)
    fam = classify.recognize_t2_equality_family(G)
    eq = cmp == 0
    return BoundReport(bid, True, lhs=_eig(G, G.n - 2), rhs=_f(t), rhs_exact=t,
                       holds=cmp <= 0, equality=eq, extremal_ok=eq == bool(fam),
                       witness={"family": fam.family, "params": fam.params} if fam else {})


def le_rhs_old(G: Graph) -> Fraction:
    return 4 * G.m - 2 * _stats(G).delta1 - Fraction(4 * G.m, G.n) + 2


def le_rhs_new(G: Graph) -> Fraction:
    return 4 * G.m - 2 * _stats(G).delta1 - Fraction(8 * G.m, G.n) + 4


def _le_report(bid: str, G: Graph, rhs: Fraction, tol: float) -> BoundReport:
    le = laplacian_energy(G).le
    return BoundReport(bid, True, lhs=le, rhs=_f(rhs), rhs_exact=rhs,
                       holds=le <= rhs + tol, equality=abs(le - float(rhs)) <= tol)


def le_upper_old(G: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    if 2 * G.m < G.n:
        return _na("le_old", "needs m >= n/2")
    return _le_report("le_old", G, le_rhs_old(G), tol)


def le_upper_new(G: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    if 2 * G.m < G.n:
        return _na("le_new", "needs m >= n/2")
    if _in_family(G):
        return _na("le_new", "graph lies in the excluded star-plus-isolated family")
    return _le_report("le_new", G, le_rhs_new(G), tol)


def compare_le_bounds(G: Graph) -> BoundReport:
    """The newer energy bound never exceeds the older one; equal iff 2m = n."""
    bid = "le_compare"
    if 2 * G.m < G.n or _in_family(G):
        return _na(bid, "needs both energy bounds applicable")
    new, old = le_rhs_new(G), le_rhs_old(G)
    return BoundReport(bid, True, lhs=_f(new), rhs=_f(old), lhs_exact=new, rhs_exact=old,
                       holds=new <= old, equality=new == old,
                       extremal_ok=(new == old) == (2 * G.m == G.n))


def s_sigma_upper(G: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    bid = "s_sigma"
    if G.m == 0:
        return _na(bid, "needs at least one edge")
    s = sigma(G).sigma
    lhs = sum_top(G, s)
    rhs = 2 * G.m - _stats(G).delta1 + s
    return BoundReport(bid, True, lhs=lhs, rhs=float(rhs), rhs_exact=Fraction(rhs),
                       holds=lhs <= rhs + tol, equality=abs(lhs - rhs) <= tol,
                       witness={"sigma": s})


def avg_lt_delta2_plus1(G: Graph) -> BoundReport:
    """2m/n <= Delta_2 + (Delta_1 - Delta_2)/n < Delta_2 + 1, in exact arithmetic."""
    bid = "avg_delta2"
    if G.n < 2:
        return _na(bid, "needs n >= 2")
    st = _stats(G)
    mid = st.delta2 + Fraction(st.delta1 - st.delta2, G.n)
    return BoundReport(bid, True, lhs=_f(st.avg_deg), rhs=_f(mid),
                       lhs_exact=st.avg_deg, rhs_exact=mid,
                       holds=st.avg_deg <= mid < st.delta2 + 1, equality=st.avg_deg == mid)


def lemma31_check(G: Graph) -> BoundReport:
    """Degree-sequence consequences of Delta_2 < 2m/n."""
    bid = "lemma31"
    if G.n <= 2:
        return _na(bid, "needs n > 2")
    st = _stats(G)
    if not st.delta2 < st.avg_deg:
        return _na(bid, "needs Delta_2 < 2m/n")
    d, d1, d2, k, n = st.degrees, st.delta1, st.delta2, st.k, G.n
    parts = {
        "i": d1 - d2 > sum(d2 - x for x in d[2:]),
        "ii": d[2] == d2,
        "iii": d1 > d2 + n - k,
        "iv": k >= d2 + n + 1 - d1 >= d2 + 2,
    }
    return BoundReport(bid, True, holds=all(parts.values()), equality=False,
                       witness={"parts": parts, "k": k})


def pan_hou_check(G: Graph) -> BoundReport:
    """Necessary conditions for mu_2 = Delta_2 on connected non-star graphs."""
    bid = "pan_hou"
    if G.n < 3 or not _connected(G) or classify.is_star(G):
        return _na(bid, "needs connected, n >= 3, not a star")
    st = _stats(G)
    if nth_eigenvalue_cmp(G, 2, st.delta2) != 0:
        return _na(bid, "mu_2 differs from Delta_2")
    deg = G.degrees
    pairs = [(u, w) for u in range(G.n) if deg[u] == st.delta1
             for w in range(G.n) if w != u and deg[w] == st.delta2]
    disjoint = [p for p in pairs if common_neighbors(G, *p) == 0]
    parts = {
        "1": bool(disjoint),
        "2": st.delta1 == st.delta2,
        "3": st.delta1 + st.delta2 == G.n,
    }
    return BoundReport(bid, True, lhs=_eig(G, 2), rhs=float(st.delta2),
                       rhs_exact=Fraction(st.delta2), holds=all(parts.values()), equality=True,
                       witness={"parts": parts, "pair": disjoint[0] if disjoint else None})


def _middle_equal_exact(G: Graph) -> bool:
    """mu_2 = ... = mu_{n-1}, decided exactly.

    For n >= 4 a common value has multiplicity n - 2 >= 2.  It is an
    algebraic integer; were it irrational its conjugates would carry the
    same multiplicity among the n - 1 nonzero-slot roots, which cannot fit,
    so it is an integer and two integer-threshold counts settle the matter.
    """
    n = G.n
    if n == 3:
        return True
    v = round(_eig(G, 2))
    c = laplacian_counts(G, v)
    # mu_2..mu_{n-1} all equal v: at most mu_1 above, at most mu_n below
    return c.above <= 1 and c.below <= 1 and c.at >= n - 2


def distinct_mu_characterization(G: Graph, tol: float = DEFAULT_TOL) -> BoundReport:
    bid = "distinct_mu"
    if G.n < 3 or not _connected(G):
        return _na(bid, "needs connected, n >= 3")
    spread = _eig(G, 2) - _eig(G, G.n - 1)
    numeric_equal = spread <= tol
    exact_equal = _middle_equal_exact(G)
    fam = classify.recognize_t4(G)
    return BoundReport(bid, True, lhs=spread, rhs=0.0,
                       holds=numeric_equal == exact_equal == bool(fam),
                       equality=exact_equal,
                       witness={"family": fam.family, "numeric": numeric_equal,
                                "exact": exact_equal})


BOUNDS: dict[str, Callable[[Graph], BoundReport]] = {
    "merris": merris_lower,
    "anderson_morley": anderson_morley_upper,
    "li_pan": li_pan_lower,
    "das": das_mu2_lower,
    "mu2_avg": mu2_avg_lower,
    "mu_n2_upper": third_smallest_upper,
    "le_old": le_upper_old,
    "le_new": le_upper_new,
    "le_compare": compare_le_bounds,
    "s_sigma": s_sigma_upper,
    "avg_delta2": avg_lt_delta2_plus1,
    "lemma31": lemma31_check,
    "pan_hou": pan_hou_check,
    "distinct_mu": distinct_mu_characterization,
}


def all_bounds(G: Graph) -> list[BoundReport]:
    return [fn(G) for fn in BOUNDS.values()]
