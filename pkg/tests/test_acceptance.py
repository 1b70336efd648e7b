"""Exit criteria, one test per criterion (criterion 4 split into its three checks)."""
import time

import numpy as np
import pytest

from oc_verifier.chevalley import PAPER_LITERAL, STANDARD, chevalley_mult
from oc_verifier.cli import window_disagreements
from oc_verifier.graph import build_graph, period, strongly_connected
from oc_verifier.operator import (
    build_c1_matrix,
    canonical_cycle,
    chain_point_to_zero,
    verify_theorem_positive,
)
from oc_verifier.partitions import enumerate_basis, make_shape
from oc_verifier.spectrum import eigenvalues, perron_root, property_o_report
from oracles import SWEEP5, SWEEP6, brute_force_basis


def test_c01_ig25_basis_enumeration():
    shape = make_shape(2, 2)
    expected = {(0, 0), (1, 0), (2, 0), (3, -1), (3, 0), (2, 1), (3, 1), (3, 2)}
    assert set(brute_force_basis(2, 2)) == expected
    uncached = enumerate_basis.__wrapped__
    best = min(_timed(uncached, shape) for _ in range(20))
    basis = uncached(shape)
    assert len(basis) == 8 and set(basis) == expected
    assert best < 1e-3


def _timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


@pytest.mark.parametrize("n", range(1, 9))
def test_c02_projective_space_closed_form(n):
    shape = make_shape(1, n)
    r = 2 * n + 1
    c1 = build_c1_matrix(shape)
    assert np.array_equal(c1.entries, r * np.roll(np.eye(r, dtype=np.int64), 1, axis=0))
    eigs = eigenvalues(c1)
    for j in range(r):
        target = r * np.exp(2j * np.pi * j / r)
        assert np.min(np.abs(eigs - target)) <= 1e-9 * r
    # every column sum is r, so the Perron root is r exactly
    assert set(c1.entries.sum(axis=0)) == {r}
    assert perron_root(c1)[0] == pytest.approx(r, rel=1e-9)
    assert shape.fano_index == r


def test_c03_ig25_degree():
    shape = make_shape(2, 2)
    vals = {(0, 0): 1}
    for _ in range(5):
        nxt = {}
        for lam, c in vals.items():
            for t in chevalley_mult(shape, lam).classical_terms:
                nxt[t.partition] = nxt.get(t.partition, 0) + c * t.coefficient
        vals = nxt
    assert vals == {(3, 2): 5}


PAPER_CHAIN = [
    (7, 6, 5, 4), (6, 5, 4, 0), (7, 5, 4, 0), (5, 4, 0, 0), (6, 4, 0, 0), (7, 4, 0, 0),
    (4, 0, 0, 0), (5, 0, 0, 0), (6, 0, 0, 0), (7, 0, 0, 0), (0, 0, 0, 0),
]


def test_c04a_worked_chain_vertices():
    assert chain_point_to_zero(make_shape(4, 5)).vertices == PAPER_CHAIN


def test_c04b_worked_chain_coefficient():
    assert chain_point_to_zero(make_shape(4, 5)).coefficient == 8


def test_c04c_worked_chain_q_degree():
    # target taken as stated (q^3); see decisions ledger
    assert chain_point_to_zero(make_shape(4, 5)).q_degree == 3


def test_c05_main_theorem_exact_path():
    t0 = time.perf_counter()
    for k, n in SWEEP6:
        shape = make_shape(k, n)
        g = build_graph(build_c1_matrix(shape))
        assert strongly_connected(g), (k, n)
        assert period(g) == shape.fano_index, (k, n)
    assert time.perf_counter() - t0 < 60


@pytest.mark.parametrize("k,n", SWEEP5)
def test_c06_main_theorem_numeric_path(k, n):
    rep = property_o_report(make_shape(k, n), mode="both", tol=1e-8, root_tol=1e-6)
    assert rep.condition1 and rep.condition2
    assert rep.numeric_verdict == rep.exact_verdict


@pytest.mark.parametrize("k,n", SWEEP6)
def test_c07_positivity_theorem(k, n):
    shape = make_shape(k, n)
    rep = verify_theorem_positive(shape)
    assert rep.a and rep.b and rep.c
    dim = shape.dimension
    assert all(len(p) - 1 <= dim for p in rep.witnesses["a"].values())
    assert len(rep.witnesses["b"]) - 1 <= dim
    assert all(len(p) - 1 <= dim for p in rep.witnesses["c"].values())
    assert chain_point_to_zero(shape).length <= k + k * (k - 1) // 2


@pytest.mark.parametrize("k,n", SWEEP6)
def test_c08_canonical_cycle(k, n):
    shape = make_shape(k, n)
    cyc = canonical_cycle(shape)
    assert cyc.length == shape.fano_index
    assert cyc.edge_kinds[-1] == "quantum_star"
    assert cyc.vertices[0] == cyc.vertices[-1]


@pytest.mark.parametrize("k,n", SWEEP6)
def test_c09_grading(k, n):
    shape = make_shape(k, n)
    for lam in enumerate_basis(shape):
        exp = chevalley_mult(shape, lam)
        assert len(exp.quantum_terms) <= 2
        assert all(t.coefficient == 1 for t in exp.quantum_terms)
        for t in exp.terms:
            assert sum(t.partition) + t.q_degree * shape.fano_index == sum(lam) + 1
            assert t.coefficient & (t.coefficient - 1) == 0 and t.coefficient > 0


def test_c10_window_policy_audit():
    for k, n in [(2, 2)] + [(1, n) for n in range(1, 9)]:
        shape = make_shape(k, n)
        a = build_c1_matrix(shape, STANDARD).entries
        b = build_c1_matrix(shape, PAPER_LITERAL).entries
        assert np.array_equal(a, b)
    for k, n in SWEEP6:
        diffs = window_disagreements(make_shape(k, n))
        # the audit reports concrete pairs whenever anything differs
        assert all({"lambda", "mu", "standard", "paper_literal"} <= set(d) for d in diffs)
