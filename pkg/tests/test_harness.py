from __future__ import annotations

import csv
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from lapsigma.graph import (Graph, complete, complete_bipartite, cycle, empty, pair_order,
                            relabel, star)
from lapsigma.graph6 import parse_graph6, to_graph6
from lapsigma.harness import (CHECK_IDS, NA, PASS, SweepSummary, canonical_mask,
                              enumerate_labeled, enumerate_nonisomorphic, random_regression,
                              records_to_csv, run_suite, star_split, verify_range)

from conftest import graphs


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_labeled_counts(n, count):
    gs = list(enumerate_labeled(n))
    assert len(gs) == count and len({g.mask for g in gs}) == count
    assert [g.mask for g in gs] == sorted(g.mask for g in gs)


def test_labeled_n7_count_without_materialising():
    assert len(pair_order(7)) == 21     # 2^21 = 2,097,152 graphs


@pytest.mark.parametrize("n", [0, 9])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        next(enumerate_labeled(n))
    with pytest.raises(ValueError):
        next(enumerate_nonisomorphic(min(n, 8) if n else 0))


def _nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(p for p in pair_order(G.n) if G.has_edge(*p))
    return H


def _brute_force_classes(n: int) -> int:
    """Oracle: bucket every labeled graph by networkx isomorphism."""
    reps: list[nx.Graph] = []
    for G in enumerate_labeled(n):
        H = _nx(G)
        if not any(nx.is_isomorphic(H, R) for R in reps):
            reps.append(H)
    return len(reps)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_nonisomorphic_counts_against_brute_force(n, count):
    gs = list(enumerate_nonisomorphic(n))
    assert len(gs) == count == _brute_force_classes(n)
    hs = [_nx(g) for g in gs]
    assert not any(nx.is_isomorphic(hs[i], hs[j])
                   for i in range(len(hs)) for j in range(i))


@pytest.mark.parametrize("n,count", [(6, 156), (7, 1044)])
def test_nonisomorphic_known_counts(n, count):
    assert sum(1 for _ in enumerate_nonisomorphic(n)) == count


@given(graphs(max_n=6))
def test_canonical_mask_is_invariant(G):
    perm = list(range(G.n))
    random.Random(G.mask).shuffle(perm)
    c = canonical_mask(G.n, G.mask)
    assert canonical_mask(G.n, relabel(G, perm).mask) == c <= G.mask


def test_run_suite_examples():
    rec = run_suite(complete_bipartite(3, 3))
    assert not rec.failed and set(rec.results) == set(CHECK_IDS)
    rec = run_suite(star(5))
    assert rec.sigma == 1 and rec.results["sigma1_equiv"] == PASS
    assert rec.results["le_new"] == NA
    rec = run_suite(empty(4))
    assert rec.sigma == 4 and rec.results["merris"] == NA and not rec.failed


def test_run_suite_failures_carry_detail():
    rec = run_suite(parse_graph6("D]o"))      # K_{2,3}
    assert rec.failed == ["pan_hou"]
    assert rec.detail["pan_hou"]


def test_run_suite_subset_and_caps():
    rec = run_suite(cycle(7), ["trace", "cauchy"])
    assert rec.results == {"trace": PASS, "cauchy": NA}
    rec = run_suite(cycle(7), ["cauchy"], capped=False)
    assert rec.results == {"cauchy": PASS}


def test_star_split():
    s, rest = star_split(complete(3))
    assert s.m == 2 and rest.m == 1 and s.n == rest.n == 3


def test_verify_range_counts_and_files(tmp_path):
    out, cex = tmp_path / "r.csv", tmp_path / "c.g6"
    summary = verify_range(2, 5, csv_path=str(out), counterexample_path=str(cex))
    assert summary.graphs == 2 + 8 + 64 + 1024
    assert all(sum(t) == summary.graphs for t in summary.tallies.values())
    raw = out.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(raw.decode().splitlines()))
    assert rows[0] == ["graph6", "n", "m", "sigma", "tie", *CHECK_IDS]
    assert len(rows) == summary.graphs + 1
    failing = {r[0] for r in rows[1:] if "F" in r[5:]}
    assert set(cex.read_text().split()) == failing
    assert summary.counterexamples == len(failing)


def test_verify_range_failures_only(tmp_path):
    out = tmp_path / "f.csv"
    s = verify_range(2, 4, csv_path=str(out), failures_only=True)
    rows = out.read_text().splitlines()
    assert len(rows) == 1 + s.counterexamples


def test_nonisomorphic_sweep_record_count():
    # 2 + 4 + 11 + 34 classes for n = 2..5 (the single n = 1 class is outside the range)
    assert verify_range(2, 5, mode="nonisomorphic").graphs == 51


@pytest.mark.parametrize("args", [(1, 3, "labeled"), (5, 4, "labeled"), (2, 9, "labeled"),
                                  (2, 8, "nonisomorphic"), (2, 3, "other")])
def test_verify_range_rejects(args):
    with pytest.raises(ValueError):
        verify_range(*args)


def test_worker_count_does_not_change_summary():
    a = verify_range(2, 5, workers=1)
    b = verify_range(2, 5, workers=3)
    assert a.render() == b.render() and a == b


def test_summary_merge_is_associative():
    recs = [run_suite(G) for G in enumerate_labeled(4)]
    whole = SweepSummary("x", CHECK_IDS)
    for r in recs:
        whole.add(r)
    left, right = SweepSummary("x", CHECK_IDS), SweepSummary("x", CHECK_IDS)
    for r in recs[:20]:
        left.add(r)
    for r in recs[20:]:
        right.add(r)
    left.merge(right)
    assert left == whole


def test_random_regression_reproducible():
    a = random_regression(seed=1, trials=5, n_max=9)
    b = random_regression(seed=1, trials=5, n_max=9)
    assert a == b and a.graphs == 5
    empty_run = random_regression(seed=3, trials=0)
    assert empty_run.graphs == 0 and empty_run.total_failures == 0


def test_records_to_csv():
    text = records_to_csv([run_suite(complete(3))])
    header, row = text.splitlines()
    assert row.startswith("Bw,3,3,2,0,")


@settings(max_examples=40)
@given(graphs(min_n=2, max_n=6))
def test_records_are_pure(G):
    assert run_suite(G) == run_suite(Graph.from_mask(G.n, G.mask))
    assert run_suite(G).graph6 == to_graph6(G).decode()
