"""Command-line front end: ``python -m oc_verifier <subcommand> ...``.

Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .chevalley import PAPER_LITERAL, STANDARD, chevalley_mult
from .graph import build_graph, export_dot, period, strongly_connected
from .operator import (
    ChainError,
    build_c1_matrix,
    canonical_cycle,
    chain_point_to_zero,
    chain_to_point,
    chain_zero_to,
    verify_conjecture_T_positive,
    verify_theorem_positive,
)
from .partitions import (
    enumerate_basis,
    format_partition,
    is_valid_odd,
    make_shape,
    parse_partition,
)
from .spectrum import GROUP_TOL, ROOT_TOL, eigenvalues, property_o_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _shape(args):
    try:
        return make_shape(args.k, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(shape, text):
    try:
        lam = parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not is_valid_odd(shape, lam):
        raise UsageError(f"{text!r} is not a basis partition of {shape}")
    return lam


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def window_disagreements(shape) -> List[dict]:
    """(lam, mu) pairs where the two window policies give different matrix entries."""
    a = build_c1_matrix(shape, STANDARD)
    b = build_c1_matrix(shape, PAPER_LITERAL)
    rows, cols = np.nonzero(a.entries != b.entries)
    return [
        {
            "lambda": list(a.basis[j]),
            "mu": list(a.basis[i]),
            "standard": int(a.entries[i, j]),
            "paper_literal": int(b.entries[i, j]),
        }
        for i, j in zip(rows, cols)
    ]


def cmd_enumerate(args):
    shape = _shape(args)
    basis = enumerate_basis(shape)
    payload = {"k": shape.k, "n": shape.n, "dimension": shape.dimension,
               "fano_index": shape.fano_index, "basis": [list(p) for p in basis]}
    text = f"{shape}: dim {shape.dimension}, r = {shape.fano_index}, {len(basis)} classes\n"
    text += "\n".join(f"  |{sum(p)}|  {format_partition(p)}" for p in basis)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_chevalley(args):
    shape = _shape(args)
    lam = _partition(shape, args.partition)
    exp = chevalley_mult(shape, lam, args.window)
    _emit(args, exp.to_dict(), f"[X(1)] * [X({format_partition(lam)})] = {exp}")
    return EXIT_OK


def cmd_graph(args):
    shape = _shape(args)
    graph = build_graph(build_c1_matrix(shape, args.window))
    conn = strongly_connected(graph)
    per = period(graph) if conn else None
    if args.dot:
        with open(args.dot, "w") as fh:
            export_dot(graph, fh)
    payload = {"k": shape.k, "n": shape.n, "vertices": len(graph),
               "edges": graph.edge_count, "strongly_connected": conn,
               "period": per, "fano_index": shape.fano_index}
    text = (f"{shape}: {len(graph)} vertices, {graph.edge_count} edges, "
            f"strongly connected: {conn}, period: {per} (r = {shape.fano_index})")
    _emit(args, payload, text)
    return EXIT_OK if conn and per == shape.fano_index else EXIT_FAIL


def cmd_positivity(args):
    shape = _shape(args)
    c1 = build_c1_matrix(shape, args.window)
    rep = verify_theorem_positive(shape, c1)
    payload = rep.to_dict()
    ok = rep.holds
    text = f"{shape}: (a) {rep.a}  (b) {rep.b}  (c) {rep.c}"
    if args.conjecture:
        conj = verify_conjecture_T_positive(shape, c1)
        payload["conjecture"] = conj.to_dict()
        text += f"\nT[X(lam)] > 0 for all lam: {conj.holds} ({len(conj.failing_pairs)} failing pairs)"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_chains(args):
    shape = _shape(args)
    try:
        if args.kind == "point-to-zero":
            chain = chain_point_to_zero(shape, args.window)
        elif args.kind == "cycle":
            chain = canonical_cycle(shape, args.window)
        else:
            if not args.target:
                raise UsageError(f"--kind {args.kind} needs --target")
            lam = _partition(shape, args.target)
            fn = chain_zero_to if args.kind == "zero-to" else chain_to_point
            chain = fn(shape, lam, args.window)
    except ChainError as exc:
        print(f"chain validation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    steps = [format_partition(chain.vertices[0])]
    for v, kind, c in zip(chain.vertices[1:], chain.edge_kinds, chain.edge_coefficients):
        tag = "q" if kind != "cover" else ""
        steps.append(f"-{c}{tag}-> {format_partition(v)}")
    text = " ".join(steps) + f"\n{chain.length} edges, coefficient {chain.coefficient}, q-degree {chain.q_degree}"
    _emit(args, chain.to_dict(), text)
    return EXIT_OK


def cmd_spectrum(args):
    shape = _shape(args)
    eigs = eigenvalues(build_c1_matrix(shape, args.window), args.tol)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["re", "im", "modulus"])
            for e in eigs:
                w.writerow([repr(float(e.real)), repr(float(e.imag)), repr(float(abs(e)))])
    payload = {"k": shape.k, "n": shape.n,
               "eigenvalues": [[float(e.real), float(e.imag)] for e in eigs]}
    text = "\n".join(f"{e.real: .12g} {e.imag:+.12g}i  |{abs(e):.12g}|" for e in eigs)
    _emit(args, payload, text)
    return EXIT_OK


def _render_report(rep) -> str:
    parts = [f"IG({rep.k}, {2 * rep.n + 1}) r={rep.fano_index}"]
    if rep.exact_verdict is not None:
        parts.append(f"exact: connected={rep.strongly_connected} period={rep.period} -> {rep.exact_verdict}")
    if rep.eigenvalues:
        parts.append(f"numeric: delta0={rep.delta0:.10g} h={rep.max_modulus_count} "
                     f"cond1={rep.condition1} cond2={rep.condition2}")
    return "  ".join(parts)


def _verdict_ok(rep, mode) -> bool:
    ok = True
    if mode in ("exact", "both"):
        ok &= bool(rep.exact_verdict)
    if mode in ("numeric", "both"):
        ok &= rep.numeric_verdict
    if mode == "both":
        ok &= bool(rep.agreement)
    return ok


def cmd_verify(args):
    shape = _shape(args)
    rep = property_o_report(shape, args.mode, args.tol, ROOT_TOL, args.window)
    payload = rep.to_dict()
    payload["verdict"] = _verdict_ok(rep, args.mode)
    _emit(args, payload, _render_report(rep))
    return EXIT_OK if payload["verdict"] else EXIT_FAIL


@dataclass
class SweepRow:
    k: int
    n: int
    report: dict
    positivity: bool
    canonical_cycle: bool
    window_disagreements: List[dict]
    seconds: float
    verdict: bool


@dataclass
class SweepResult:
    rows: List[SweepRow] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(r.verdict for r in self.rows)

    def to_dict(self) -> dict:
        return {"verdict": self.verdict,
                "rows": [r.__dict__ for r in self.rows]}


def sweep_one(k: int, n: int, mode: str, tol: float, window: str) -> SweepRow:
    t0 = time.perf_counter()
    shape = make_shape(k, n)
    c1 = build_c1_matrix(shape, window)
    rep = property_o_report(shape, mode, tol, ROOT_TOL, window, c1=c1)
    pos = verify_theorem_positive(shape, c1).holds
    try:
        canonical_cycle(shape, window)
        cyc = True
    except ChainError:
        cyc = False
    diffs = window_disagreements(shape)
    ok = _verdict_ok(rep, mode) and pos and cyc
    return SweepRow(k, n, rep.to_dict(), pos, cyc, diffs, time.perf_counter() - t0, ok)


def run_sweep(max_n: int, mode: str = "both", tol: float = GROUP_TOL,
              window: str = STANDARD, jobs: int = 1) -> SweepResult:
    grid = [(k, n) for n in range(1, max_n + 1) for k in range(1, n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(sweep_one, *zip(*grid), *[[x] * len(grid) for x in (mode, tol, window)]))
    else:
        rows = [sweep_one(k, n, mode, tol, window) for k, n in grid]
    return SweepResult(rows)


def cmd_sweep(args):
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    res = run_sweep(args.max_n, args.mode, args.tol, args.window, args.jobs)
    lines = []
    for row in res.rows:
        flag = "ok  " if row.verdict else "FAIL"
        extra = f"  window disagreements: {len(row.window_disagreements)}" if row.window_disagreements else ""
        lines.append(f"{flag} IG({row.k}, {2 * row.n + 1})  {row.seconds:.2f}s{extra}")
    lines.append(f"{len(res.rows)} shapes, verdict {'PASS' if res.verdict else 'FAIL'}")
    _emit(args, res.to_dict(), "\n".join(lines))
    disagree = any(r.window_disagreements for r in res.rows)
    if not res.verdict or (args.strict and disagree):
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oc-verifier",
                                description="Property O checks for odd-symplectic Grassmannians IG(k, 2n+1)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, shape=True):
        if shape:
            sp.add_argument("--k", type=int, required=True)
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--window", default=STANDARD, type=lambda s: s.replace("-", "_"),
                        choices=[STANDARD, PAPER_LITERAL])
        sp.add_argument("--json", action="store_true")
        return sp

    common(sub.add_parser("enumerate", help="list the Schubert basis")).set_defaults(func=cmd_enumerate)
    sp = common(sub.add_parser("chevalley", help="[X(1)] * [X(lam)]"))
    sp.add_argument("--partition", required=True)
    sp.set_defaults(func=cmd_chevalley)
    sp = common(sub.add_parser("graph", help="quantum Bruhat graph summary"))
    sp.add_argument("--dot")
    sp.set_defaults(func=cmd_graph)
    sp = common(sub.add_parser("positivity", help="positivity of T"))
    sp.add_argument("--conjecture", action="store_true")
    sp.set_defaults(func=cmd_positivity)
    sp = common(sub.add_parser("chains", help="Chevalley chains used in the positivity proof"))
    sp.add_argument("--kind", required=True, choices=["point-to-zero", "zero-to", "to-point", "cycle"])
    sp.add_argument("--target")
    sp.set_defaults(func=cmd_chains)
    sp = common(sub.add_parser("spectrum", help="eigenvalues of M"))
    sp.add_argument("--csv")
    sp.add_argument("--tol", type=float, default=GROUP_TOL)
    sp.set_defaults(func=cmd_spectrum)
    sp = common(sub.add_parser("verify", help="Property O verdict for one shape"))
    sp.add_argument("--mode", choices=["exact", "numeric", "both"], default="both")
    sp.add_argument("--tol", type=float, default=GROUP_TOL)
    sp.set_defaults(func=cmd_verify)
    sp = common(sub.add_parser("sweep", help="verify all 1 <= k <= n <= max-n"), shape=False)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--mode", choices=["exact", "numeric", "both"], default="both")
    sp.add_argument("--tol", type=float, default=GROUP_TOL)
    sp.add_argument("--jobs", type=int, default=int(os.environ.get("OC_VERIFIER_JOBS", "1")))
    sp.add_argument("--strict", action="store_true",
                    help="fail when the two window policies disagree anywhere")
    sp.set_defaults(func=cmd_sweep)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
