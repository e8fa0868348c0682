"""Command-line interface.

Input (per-graph commands): exactly one of --graph6 S, --file PATH or
--family SPEC; with none of them, newline-delimited graph6 is read from
standard input.  A family SPEC is ``name:p1,p2``, for example
``star_plus_isolated:6,1`` or ``complete:4``.

Exit status: 0 success, 1 a verified failure was found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Any, Iterable

from . import appendix, bounds, classify, harness
from .exact import laplacian_charpoly, sigma
from .graph import FAMILIES, Graph, degree_stats, family
from .graph6 import Graph6Error, parse_graph6, read_graph6, to_graph6
from .numeric import DEFAULT_TOL, laplacian_energy, laplacian_spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def fmt(x: Any) -> str:
    """Text rendering: floats at 6 significant digits, exact values as fractions."""
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        s = f"{x:.6g}"
        return "0" if s == "-0" else s
    if x is None:
        return "-"
    return str(x)


def _num(x: float | None, exact: Fraction | None = None) -> Any:
    """JSON rendering of a number, carrying the exact rational when there is one."""
    if exact is not None:
        return {"value": float(exact), "exact": str(exact)}
    return x


def parse_family_spec(spec: str) -> Graph:
    name, _, args = spec.partition(":")
    try:
        params = [int(p) for p in args.split(",")] if args else []
    except ValueError:
        raise UsageError(f"family parameters must be integers: {spec!r}") from None
    try:
        return family(name, *params)
    except ValueError as e:
        raise UsageError(str(e)) from None


def load_graphs(args) -> list[Graph]:
    sources = [s for s in (args.graph6, args.file, args.family) if s is not None]
    if len(sources) > 1:
        raise UsageError("give at most one of --graph6, --file, --family")
    if args.family is not None:
        return [parse_family_spec(args.family)]
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    if args.file is not None:
        try:
            with open(args.file, "rb") as fh:
                return list(read_graph6(fh))
        except OSError as e:
            raise UsageError(f"cannot read {args.file}: {e}") from None
    return list(read_graph6(sys.stdin.buffer))


# -- reports -------------------------------------------------------------------

def compute_report(G: Graph, tol: float) -> dict[str, Any]:
    st = degree_stats(G)
    s = sigma(G)
    spec = laplacian_spectrum(G)
    energy = laplacian_energy(G, tol)
    return {
        "graph6": to_graph6(G).decode(),
        "n": G.n,
        "m": G.m,
        "degrees": list(st.degrees),
        "delta1": st.delta1,
        "delta2": st.delta2,
        "k": st.k,
        "avg_degree": _num(None, st.avg_deg),
        "sigma": s.sigma,
        "tie": s.tie,
        "counts": {"above": s.counts.above, "at": s.counts.at, "below": s.counts.below},
        "charpoly": str(laplacian_charpoly(G)),
        "spectrum": list(spec.clamped()),
        "spectrum_err": spec.err,
        "laplacian_energy": energy.le,
        "eq1_residual": energy.identity_residual,
    }


def classify_report(G: Graph) -> dict[str, Any]:
    s = sigma(G).sigma
    sp = classify.recognize_star_plus_isolated(G)
    mu2 = classify.recognize_mu2_equality_family(G)
    t2 = classify.recognize_t2_equality_family(G)
    t4 = classify.recognize_t4(G)
    kb = classify.recognize_complete_bipartite(G)
    structural = classify.sigma1_by_structure(G) if G.n >= 2 else None
    return {
        "graph6": to_graph6(G).decode(),
        "n": G.n,
        "star_plus_isolated": list(sp.params) if sp else None,
        "exception_family_1mk1": classify.in_exception_family_1mk1(G),
        "exception_family_t2": classify.in_exception_family_t2(G),
        "mu2_equality_family": mu2.family,
        "t2_equality_family": t2.family,
        "t4_family": t4.family,
        "complete_bipartite": list(kb.params) if kb else None,
        "sigma1_structural": structural,
        "sigma": s,
        "sigma1_spectral": s == 1,
        "consistent": None if structural is None else structural == (s == 1),
    }


def _bound_row(r: bounds.BoundReport) -> dict[str, Any]:
    return {
        "bound": r.bound_id,
        "applicable": r.applicable,
        "reason": r.reason,
        "lhs": _num(r.lhs, r.lhs_exact),
        "rhs": _num(r.rhs, r.rhs_exact),
        "holds": r.holds,
        "equality": r.equality,
        "extremal_ok": r.extremal_ok,
        "witness": {k: _jsonable(v) for k, v in r.witness.items()},
    }


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _text_value(v: Any) -> str:
    if isinstance(v, dict) and set(v) == {"value", "exact"}:
        return v["exact"]
    if isinstance(v, list):
        return " ".join(fmt(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    return fmt(v)


def emit(rows: list[dict[str, Any]], fmt_name: str, out) -> None:
    if fmt_name == "json":
        json.dump(_jsonable(rows), out, indent=2, default=str)
        out.write("\n")
    elif fmt_name == "csv":
        if not rows:
            return
        w = csv.writer(out, lineterminator="\n")
        keys = list(rows[0])
        w.writerow(keys)
        for r in rows:
            w.writerow([_text_value(r[k]) for k in keys])
    else:
        for i, r in enumerate(rows):
            if i:
                out.write("\n")
            width = max(len(k) for k in r)
            for k, v in r.items():
                out.write(f"{k:<{width}}  {_text_value(v)}\n")


def emit_bounds(reports: list[tuple[str, list[bounds.BoundReport]]], fmt_name: str, out) -> None:
    if fmt_name == "json":
        json.dump([{"graph6": g6, "bounds": [_jsonable(_bound_row(r)) for r in rs]}
                   for g6, rs in reports], out, indent=2, default=str)
        out.write("\n")
        return
    if fmt_name == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["graph6", "bound", "applicable", "lhs", "rhs", "holds", "equality"])
        for g6, rs in reports:
            for r in rs:
                row = _bound_row(r)
                w.writerow([g6, r.bound_id, fmt(r.applicable), _text_value(row["lhs"]),
                            _text_value(row["rhs"]), fmt(r.holds), fmt(r.equality)])
        return
    for i, (g6, rs) in enumerate(reports):
        if i:
            out.write("\n")
        out.write(f"graph6: {g6}\n")
        out.write(f"{'bound':<16} {'status':<8} {'lhs':>10} {'rhs':>10}  equality\n")
        for r in rs:
            if not r.applicable:
                out.write(f"{r.bound_id:<16} {'n/a':<8} {'':>10} {'':>10}  ({r.reason})\n")
                continue
            row = _bound_row(r)
            status = "holds" if r.passed else "FAILS"
            eq = "equality" if r.equality else ""
            out.write(f"{r.bound_id:<16} {status:<8} {_text_value(row['lhs']):>10} "
                      f"{_text_value(row['rhs']):>10}  {eq}\n")


# -- commands ------------------------------------------------------------------

def cmd_compute(args) -> int:
    emit([compute_report(G, args.tol) for G in load_graphs(args)], args.format, sys.stdout)
    return EXIT_OK


def cmd_bounds(args) -> int:
    reports = [(to_graph6(G).decode(), bounds.all_bounds(G)) for G in load_graphs(args)]
    emit_bounds(reports, args.format, sys.stdout)
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = [classify_report(G) for G in load_graphs(args)]
    emit(rows, args.format, sys.stdout)
    return EXIT_FAIL if any(r["consistent"] is False for r in rows) else EXIT_OK


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"--n expects A..B, got {text!r}") from None
    return a, b


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.n) if args.n else ((8, 10) if args.seed is not None else (2, 7))
    if args.seed is not None:
        if args.trials < 0 or lo > hi or lo < 2:
            raise UsageError("random regression needs 2 <= A <= B and --trials >= 0")
        summary = harness.random_regression(args.seed, args.trials, n_max=hi, n_min=lo, tol=args.tol)
    else:
        try:
            harness.check_range(lo, hi, args.mode)
        except ValueError as e:
            raise UsageError(str(e)) from None
        try:
            summary = harness.verify_range(lo, hi, args.mode, args.workers, csv_path=args.out,
                                           counterexample_path=args.counterexamples,
                                           failures_only=args.failures_only, tol=args.tol)
        except OSError as e:
            raise UsageError(f"cannot write output: {e}") from None
    sys.stdout.write(summary.render())
    if summary.failures:
        shown = summary.failures[:args.show_failures]
        sys.stdout.write(f"first {len(shown)} of {len(summary.failures)} failures:\n")
        for g6, cid in shown:
            sys.stdout.write(f"  {g6}  {cid}\n")
    sys.stderr.write(f"wall time: {summary.wall_time:.1f}s\n")
    return EXIT_FAIL if summary.total_failures else EXIT_OK


def cmd_appendix(args) -> int:
    ids = [args.id] if args.id else list(appendix.IDS)
    if args.d1 is not None or args.d2 is not None:
        if args.d1 is None or args.d2 is None or args.id is None:
            raise UsageError("--d1 and --d2 go together with --id")
        try:
            reports = [appendix.verify_param_matrix(args.id, args.d1, args.d2)]
        except ValueError as e:
            raise UsageError(str(e)) from None
    else:
        reports = appendix.sweep(ids, args.d1_max, args.d2_max)
    bad = [r for r in reports if not r.holds]
    if len(reports) == 1:
        r = reports[0]
        rows = [{"matrix": r.bound_id.removeprefix("appendix_"),
                 "eigenvalues": list(r.witness["eigenvalues"]),
                 "mu2_threshold": r.rhs_exact,
                 "strict": r.witness["strict"],
                 "test_points": r.witness["test_points"],
                 "checks": r.witness["parts"],
                 "holds": r.holds}]
        emit(rows, args.format, sys.stdout)
    else:
        per = {}
        for r in reports:
            t = per.setdefault(r.bound_id.removeprefix("appendix_"), [0, 0])
            t[0 if r.holds else 1] += 1
        rows = [{"matrix": k, "pass": p, "fail": f} for k, (p, f) in per.items()]
        emit(rows, args.format if args.format != "text" else "csv", sys.stdout)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_convert(args) -> int:
    for G in load_graphs(args):
        if args.to == "graph6":
            sys.stdout.write(to_graph6(G).decode() + "\n")
        else:
            edges = " ".join(f"{u}-{v}" for u, v in G.edges())
            sys.stdout.write(f"{G.n}: {edges}\n".rstrip() + "\n")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------

def _positive(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--file", help="file of newline-delimited graph6")
    p.add_argument("--family", help="family spec name:p1,p2; names: " + ", ".join(FAMILIES))
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--tol", type=_positive, default=DEFAULT_TOL)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lapsigma", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="sigma, spectrum and Laplacian energy")
    _add_input(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="evaluate every eigenvalue bound")
    _add_input(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="structural family recognition")
    _add_input(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustive sweep, or random regression with --seed")
    p.add_argument("--n", help="vertex range A..B (default 2..7; 8..10 with --seed)")
    p.add_argument("--mode", choices=("labeled", "nonisomorphic"), default="labeled")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="CSV path for all records")
    p.add_argument("--failures-only", action="store_true", help="CSV keeps failing records only")
    p.add_argument("--counterexamples", help="graph6 file of failing graphs")
    p.add_argument("--seed", type=int, help="run Erdos-Renyi regression with this seed")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--tol", type=_positive, default=DEFAULT_TOL)
    p.add_argument("--show-failures", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("appendix", help="parametrised matrices L1..L9")
    p.add_argument("--id", choices=appendix.IDS)
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.add_argument("--d1-max", type=int, default=40)
    p.add_argument("--d2-max", type=int, default=10)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_appendix)

    p = sub.add_parser("convert", help="re-emit graphs as graph6 or edge lists")
    _add_input(p)
    p.add_argument("--to", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=cmd_convert)
    return ap


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as e:   # argparse exits 2 on usage errors, 0 on --help
        return int(e.code or 0)
    if getattr(args, "workers", 1) < 1:
        sys.stderr.write("lapsigma: --workers must be at least 1\n")
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, Graph6Error) as e:
        sys.stderr.write(f"lapsigma: {e}\n")
        return EXIT_USAGE
