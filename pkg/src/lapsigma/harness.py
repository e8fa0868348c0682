"""Exhaustive and randomised verification over small graphs.

Every check returns "P", "F" or "NA".  Labeled enumeration walks edge
bitmasks in increasing order (bit b is the pair ``pair_order(n)[b]``), so
record order is fixed by the enumeration alone.  Work is split into
contiguous mask ranges and merged in order, which makes every summary
independent of the worker count.
"""

from __future__ import annotations

import csv
import io
import itertools
import multiprocessing as mp
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator

import numpy as np

from . import bounds, classify
from .exact import laplacian, laplacian_charpoly, laplacian_counts, sigma
from .graph import (Graph, complement, component_vertex_sets, delete_edge, from_edges,
                    pair_order)
from .graph6 import to_graph6
from .numeric import (DEFAULT_TOL, check_cauchy_interlacing, check_edge_interlacing,
                      check_ky_fan, laplacian_energy, laplacian_spectrum)
from .poly import IntPolynomial

LABELED_MAX = 8
NONISO_MAX = 7
CHUNK = 4096

PASS, FAIL, NA = "P", "F", "NA"


# -- enumeration --------------------------------------------------------------

def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in edge-bitmask order."""
    if not 1 <= n <= LABELED_MAX:
        raise ValueError(f"labeled enumeration supports 1 <= n <= {LABELED_MAX}, got {n}")
    for mask in range(1 << len(pair_order(n))):
        yield Graph.from_mask(n, mask)


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> np.ndarray:
    """W[p, b] = 2^(index of pair b after applying permutation p)."""
    pairs = pair_order(n)
    index = {pq: b for b, pq in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    W = np.empty((len(perms), len(pairs)), dtype=np.float64)
    for p, perm in enumerate(perms):
        for b, (i, j) in enumerate(pairs):
            u, v = perm[i], perm[j]
            W[p, b] = 2.0 ** index[(u, v) if u < v else (v, u)]
    return W


def canonical_mask(n: int, mask: int) -> int:
    """Smallest edge bitmask over all relabelings (exact: masks stay below 2^53)."""
    E = len(pair_order(n))
    if E == 0:
        return 0
    bits = np.array([(mask >> b) & 1 for b in range(E)], dtype=np.float64)
    return int((_perm_weights(n) @ bits).min())


@lru_cache(maxsize=None)
def _noniso_masks(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    pairs = pair_order(n)
    new_bits = [b for b, (i, j) in enumerate(pairs) if j == n - 1]
    found = set()
    for small in _noniso_masks(n - 1):
        # pair_order(n-1) is a prefix of pair_order(n): old bits stay in place
        for nbrs in range(1 << (n - 1)):
            mask = small
            for k, b in enumerate(new_bits):
                if nbrs >> k & 1:
                    mask |= 1 << b
            found.add(canonical_mask(n, mask))
    return tuple(sorted(found))


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, by increasing mask."""
    if not 1 <= n <= NONISO_MAX:
        raise ValueError(f"nonisomorphic enumeration supports 1 <= n <= {NONISO_MAX}, got {n}")
    for mask in _noniso_masks(n):
        yield Graph.from_mask(n, mask)


# -- individual checks ----------------------------------------------------------

CheckResult = tuple[str, str]   # (status, detail)


def _from_bound(report: bounds.BoundReport) -> CheckResult:
    if not report.applicable:
        return NA, ""
    if report.passed:
        return PASS, ""
    return FAIL, f"lhs={report.lhs} rhs={report.rhs_exact or report.rhs} {report.witness}"


def _bound_check(fn: Callable[[Graph], bounds.BoundReport]) -> Callable[[Graph, float], CheckResult]:
    return lambda G, tol: _from_bound(fn(G))


def _bound_check_tol(fn) -> Callable[[Graph, float], CheckResult]:
    return lambda G, tol: _from_bound(fn(G, tol))


def check_sigma1_equiv(G: Graph, tol: float) -> CheckResult:
    """Structural family membership iff sigma = 1 (n >= 2)."""
    if G.n < 2:
        return NA, ""
    s = sigma(G).sigma
    structural = classify.sigma1_by_structure(G)
    if structural == (s == 1):
        return PASS, ""
    return FAIL, f"sigma={s} structural={structural}"


def check_sigma_ge2(G: Graph, tol: float) -> CheckResult:
    if G.n <= 2 or bounds._in_family(G):
        return NA, ""
    s = sigma(G).sigma
    return (PASS, "") if s >= 2 else (FAIL, f"sigma={s}")


def check_eq1_identity(G: Graph, tol: float) -> CheckResult:
    r = laplacian_energy(G).identity_residual
    return (PASS, "") if r <= tol else (FAIL, f"residual={r:.3e}")


def check_charpoly_identities(G: Graph, tol: float) -> CheckResult:
    """-c_{n-1} = 2m, p(0) = 0, and multiplicity of 0 = number of components."""
    p = laplacian_charpoly(G)
    ok = (p.degree == G.n and p.lc == 1 and -p.coeffs[G.n - 1] == 2 * G.m and p(0) == 0
          and laplacian_counts(G, 0).at == len(component_vertex_sets(G)))
    return (PASS, "") if ok else (FAIL, f"charpoly={p}")


def check_trace(G: Graph, tol: float) -> CheckResult:
    spec = laplacian_spectrum(G)
    dev = abs(sum(spec.values) - 2 * G.m)
    return (PASS, "") if dev <= G.n * spec.err + tol else (FAIL, f"trace deviation {dev:.3e}")


def check_exact_numeric_agree(G: Graph, tol: float) -> CheckResult:
    """Sturm and Descartes counts agree, and match the numeric spectrum off ties."""
    avg = Fraction(2 * G.m, G.n)
    des = sigma(G, "descartes")
    stu = sigma(G, "sturm")
    if des != stu:
        return FAIL, f"descartes={des.counts} sturm={stu.counts}"
    spec = laplacian_spectrum(G)
    # err is exactly 0 for the zero matrix; keep the band open around ties
    margin = max(10 * spec.err, 1e-12)
    a = float(avg)
    above = sum(mu > a + margin for mu in spec.values)
    at_or_above = sum(mu > a - margin for mu in spec.values)
    c = stu.counts
    if above != c.above or at_or_above != c.above + c.at:
        return FAIL, f"numeric ({above}, {at_or_above}) vs exact {c}"
    return PASS, ""


def _reflect_shift(p: IntPolynomial, n: int) -> IntPolynomial:
    """p(n - x)."""
    return p.clear_threshold(Fraction(n)).reflect()


def check_complement_pairing(G: Graph, tol: float) -> CheckResult:
    """Complement spectrum {0} ∪ {n - mu_i}: exact polynomial identity plus numeric match."""
    n = G.n
    H = complement(G)
    pg, ph = laplacian_charpoly(G), laplacian_charpoly(H)
    x = IntPolynomial([0, 1])
    n_minus_x = IntPolynomial([n, -1])
    sign = -1 if (n - 1) % 2 else 1
    if x * _reflect_shift(pg, n) != n_minus_x * ph * sign:
        return FAIL, "characteristic polynomial identity fails"
    mus = laplacian_spectrum(G).values
    expected = sorted([n - mu for mu in mus[:-1]] + [0.0], reverse=True)
    got = laplacian_spectrum(H).values
    worst = max(abs(a - b) for a, b in zip(expected, got))
    return (PASS, "") if worst <= tol else (FAIL, f"max deviation {worst:.3e}")


def check_edge_interlacing_all(G: Graph, tol: float) -> CheckResult:
    if G.m == 0:
        return NA, ""
    for u, v in G.edges():
        if not check_edge_interlacing(G, u, v, tol):
            return FAIL, f"edge ({u},{v})"
    return PASS, ""


def check_cauchy_all(G: Graph, tol: float) -> CheckResult:
    L = laplacian(G)
    for k in range(1, G.n + 1):
        if not check_cauchy_interlacing(L, k, tol):
            return FAIL, f"k={k}"
    return PASS, ""


def star_split(G: Graph) -> tuple[Graph, Graph]:
    """(K_{1,Delta_1} at a maximum-degree vertex, the remaining edges), both on V(G)."""
    deg = G.degrees
    c = deg.index(max(deg))
    star_edges = [(c, v) for v in G.neighbors(c)]
    rest = G
    for u, v in star_edges:
        rest = delete_edge(rest, u, v)
    return from_edges(G.n, star_edges), rest


def check_ky_fan_split(G: Graph, tol: float) -> CheckResult:
    if G.m == 0:
        return NA, ""
    A, B = star_split(G)
    LA, LB = laplacian(A), laplacian(B)
    for k in range(1, G.n + 1):
        if not check_ky_fan(LA, LB, k, tol):
            return FAIL, f"k={k}"
    return PASS, ""


def check_duality(G: Graph, tol: float) -> CheckResult:
    """Outside both families, the mu_{n-2} bound on G holds iff the mu_2 bound on the complement does."""
    if G.n < 3 or bounds._in_family(G) or classify.in_exception_family_t2(G):
        return NA, ""
    left = bounds.third_smallest_upper(G)
    right = bounds.mu2_avg_lower(complement(G))
    if not (left.applicable and right.applicable):
        return FAIL, "applicability differs across the complement"
    ok = left.holds == right.holds and left.equality == right.equality
    return (PASS, "") if ok else (FAIL, f"G: {left.holds}/{left.equality} "
                                        f"complement: {right.holds}/{right.equality}")


@dataclass(frozen=True)
class Check:
    id: str
    fn: Callable[[Graph, float], CheckResult]
    # largest n swept exhaustively; above it the check reports NA (None: no cap)
    max_n: int | None = None


CHECKS: tuple[Check, ...] = (
    Check("sigma1_equiv", check_sigma1_equiv),
    Check("sigma_ge2", check_sigma_ge2),
    Check("mu2_avg", _bound_check(bounds.mu2_avg_lower)),
    Check("mu_n2_upper", _bound_check(bounds.third_smallest_upper)),
    Check("le_old", _bound_check_tol(bounds.le_upper_old)),
    Check("le_new", _bound_check_tol(bounds.le_upper_new)),
    Check("le_compare", _bound_check(bounds.compare_le_bounds)),
    Check("s_sigma", _bound_check_tol(bounds.s_sigma_upper)),
    Check("eq1_identity", check_eq1_identity),
    Check("merris", _bound_check(bounds.merris_lower)),
    Check("anderson_morley", _bound_check(bounds.anderson_morley_upper)),
    Check("li_pan", _bound_check(bounds.li_pan_lower)),
    Check("das", _bound_check_tol(bounds.das_mu2_lower)),
    Check("avg_delta2", _bound_check(bounds.avg_lt_delta2_plus1)),
    Check("lemma31", _bound_check(bounds.lemma31_check)),
    Check("pan_hou", _bound_check(bounds.pan_hou_check)),
    Check("distinct_mu", _bound_check_tol(bounds.distinct_mu_characterization)),
    Check("charpoly_identities", check_charpoly_identities),
    Check("trace", check_trace),
    Check("exact_numeric_agree", check_exact_numeric_agree, 6),
    Check("complement_pairing", check_complement_pairing, 6),
    Check("edge_interlacing", check_edge_interlacing_all, 6),
    Check("cauchy", check_cauchy_all, 5),
    Check("ky_fan", check_ky_fan_split, 6),
    Check("duality", check_duality, 6),
)

CHECK_IDS: tuple[str, ...] = tuple(c.id for c in CHECKS)
_BY_ID = {c.id: c for c in CHECKS}


# -- records and summaries ------------------------------------------------------

@dataclass(frozen=True)
class VerificationRecord:
    graph6: str
    n: int
    m: int
    sigma: int
    tie: bool
    results: dict[str, str]
    detail: dict[str, str] = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [cid for cid, s in self.results.items() if s == FAIL]


def run_suite(G: Graph, suite: Iterable[str] | None = None, tol: float = DEFAULT_TOL,
              capped: bool = True) -> VerificationRecord:
    """Run the selected checks on G; a check that raises is recorded as a failure."""
    ids = CHECK_IDS if suite is None else tuple(suite)
    results: dict[str, str] = {}
    detail: dict[str, str] = {}
    for cid in ids:
        chk = _BY_ID[cid]
        if capped and chk.max_n is not None and G.n > chk.max_n:
            results[cid] = NA
            continue
        try:
            status, info = chk.fn(G, tol)
        except Exception as exc:   # a crash is a failed check, with the reason kept
            status, info = FAIL, f"{type(exc).__name__}: {exc}"
        results[cid] = status
        if status == FAIL:
            detail[cid] = info or "failed"
    s = sigma(G)
    return VerificationRecord(to_graph6(G).decode(), G.n, G.m, s.sigma, s.tie, results, detail)


@dataclass
class SweepSummary:
    label: str
    check_ids: tuple[str, ...]
    graphs: int = 0
    tallies: dict[str, list[int]] = field(default_factory=dict)   # id -> [P, F, NA]
    counterexamples: int = 0
    # failing (graph6, check id) pairs, in enumeration order
    failures: list[tuple[str, str]] = field(default_factory=list)
    wall_time: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        for cid in self.check_ids:
            self.tallies.setdefault(cid, [0, 0, 0])

    def add(self, rec: VerificationRecord) -> None:
        self.graphs += 1
        for cid in self.check_ids:
            self.tallies[cid][(PASS, FAIL, NA).index(rec.results[cid])] += 1
        bad = rec.failed
        if bad:
            self.counterexamples += 1
            self.failures.extend((rec.graph6, cid) for cid in bad)

    def merge(self, other: SweepSummary) -> None:
        self.graphs += other.graphs
        for cid in self.check_ids:
            for i in range(3):
                self.tallies[cid][i] += other.tallies[cid][i]
        self.counterexamples += other.counterexamples
        self.failures.extend(other.failures)

    @property
    def total_failures(self) -> int:
        return sum(t[1] for t in self.tallies.values())

    def render(self) -> str:
        """Aligned table plus a key=value block; excludes wall time so it is reproducible."""
        w = max(len(c) for c in self.check_ids) if self.check_ids else 5
        lines = [f"sweep: {self.label}", f"graphs: {self.graphs}",
                 f"{'check':<{w}}  {'pass':>9}  {'fail':>9}  {'n/a':>9}"]
        for cid in self.check_ids:
            p, f, na = self.tallies[cid]
            lines.append(f"{cid:<{w}}  {p:>9}  {f:>9}  {na:>9}")
        lines.append(f"counterexamples: {self.counterexamples}")
        lines.append("")
        lines.append(f"graphs={self.graphs}")
        for cid in self.check_ids:
            p, f, na = self.tallies[cid]
            lines.append(f"{cid}={p},{f},{na}")
        lines.append(f"counterexamples={self.counterexamples}")
        return "\n".join(lines) + "\n"


# -- sweeps ---------------------------------------------------------------------

def _graphs_for(task) -> Iterator[Graph]:
    mode, n, start, stop = task
    if mode == "labeled":
        for mask in range(start, stop):
            yield Graph.from_mask(n, mask)
    else:
        for mask in _noniso_masks(n)[start:stop]:
            yield Graph.from_mask(n, mask)


def _run_task(args):
    task, suite, tol, keep_all = args
    summary = SweepSummary("", suite)
    kept = []
    for G in _graphs_for(task):
        rec = run_suite(G, suite, tol)
        summary.add(rec)
        if keep_all or rec.failed:
            kept.append(rec)
    return summary, kept


def _tasks(n_min: int, n_max: int, mode: str) -> list[tuple[str, int, int, int]]:
    tasks = []
    for n in range(n_min, n_max + 1):
        total = 1 << len(pair_order(n)) if mode == "labeled" else len(_noniso_masks(n))
        tasks.extend((mode, n, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK))
    return tasks


def check_range(n_min: int, n_max: int, mode: str) -> None:
    if mode not in ("labeled", "nonisomorphic"):
        raise ValueError(f"unknown mode {mode!r}")
    top = LABELED_MAX if mode == "labeled" else NONISO_MAX
    if not 2 <= n_min <= n_max <= top:
        raise ValueError(f"{mode} sweeps need 2 <= n_min <= n_max <= {top}, "
                         f"got {n_min}..{n_max}")


def _csv_row(rec: VerificationRecord, ids: tuple[str, ...]) -> list:
    return [rec.graph6, rec.n, rec.m, rec.sigma, int(rec.tie)] + [rec.results[c] for c in ids]


def verify_range(n_min: int, n_max: int, mode: str = "labeled", workers: int = 1,
                 csv_path: str | None = None, counterexample_path: str | None = None,
                 failures_only: bool = False, suite: Iterable[str] | None = None,
                 tol: float = DEFAULT_TOL) -> SweepSummary:
    check_range(n_min, n_max, mode)
    ids = CHECK_IDS if suite is None else tuple(suite)
    unknown = set(ids) - set(CHECK_IDS)
    if unknown:
        raise ValueError(f"unknown check ids: {sorted(unknown)}")
    if mode == "nonisomorphic":
        for n in range(n_min, n_max + 1):
            _noniso_masks(n)   # build once here rather than in every worker
    keep_all = csv_path is not None and not failures_only
    jobs = [(t, ids, tol, keep_all) for t in _tasks(n_min, n_max, mode)]
    summary = SweepSummary(f"n={n_min}..{n_max} mode={mode}", ids)
    t0 = time.perf_counter()

    csv_file = open(csv_path, "w", newline="", encoding="utf-8") if csv_path else None
    cex_file = open(counterexample_path, "w", encoding="utf-8") if counterexample_path else None
    try:
        writer = None
        if csv_file:
            writer = csv.writer(csv_file, lineterminator="\n")
            writer.writerow(["graph6", "n", "m", "sigma", "tie", *ids])
        if workers > 1:
            ctx = mp.get_context("fork")
            pool = ctx.Pool(workers)
            results = pool.imap(_run_task, jobs)
        else:
            pool = None
            results = map(_run_task, jobs)
        try:
            for part, kept in results:
                summary.merge(part)
                for rec in kept:
                    if writer:
                        writer.writerow(_csv_row(rec, ids))
                    if cex_file and rec.failed:
                        cex_file.write(rec.graph6 + "\n")
        finally:
            if pool is not None:
                pool.close()
                pool.join()
    finally:
        if csv_file:
            csv_file.close()
        if cex_file:
            cex_file.close()
    summary.wall_time = time.perf_counter() - t0
    return summary


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = pair_order(n)
    keep = rng.random(len(pairs)) < p
    return from_edges(n, [pq for pq, k in zip(pairs, keep) if k])


def random_regression(seed: int, trials: int, n_max: int = 10, n_min: int = 8,
                      suite: Iterable[str] | None = None,
                      tol: float = DEFAULT_TOL) -> SweepSummary:
    """Erdos-Renyi spot checks beyond the exhaustive range, reproducible from the seed.

    The per-check size caps of the exhaustive sweep are lifted here.
    """
    if n_min > n_max:
        raise ValueError("random regression needs n_min <= n_max")
    ids = CHECK_IDS if suite is None else tuple(suite)
    rng = np.random.default_rng(seed)
    summary = SweepSummary(f"random seed={seed} trials={trials} n={n_min}..{n_max}", ids)
    t0 = time.perf_counter()
    for _ in range(trials):
        n = int(rng.integers(n_min, n_max + 1))
        p = float(rng.choice([0.2, 0.5, 0.8]))
        summary.add(run_suite(random_graph(rng, n, p), ids, tol, capped=False))
    summary.wall_time = time.perf_counter() - t0
    return summary


def records_to_csv(records: Iterable[VerificationRecord], ids: tuple[str, ...] = CHECK_IDS) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph6", "n", "m", "sigma", "tie", *ids])
    for rec in records:
        w.writerow(_csv_row(rec, ids))
    return buf.getvalue()
