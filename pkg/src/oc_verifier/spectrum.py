"""Eigenvalues of M and the Property O verdict.

Two independent routes are compared: a numeric one (full spectrum via
LAPACK's Hessenberg QR, plus a power iteration for the Perron root) and an
exact one (strong connectivity and period of the digraph D(M)).  For an
irreducible nonnegative matrix the number of eigenvalues of maximal modulus
equals the period of D(M), so the two must agree.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .chevalley import STANDARD
from .graph import QuantumBruhatGraph, build_graph, period, strongly_connected
from .operator import C1Matrix, build_c1_matrix
from .partitions import GrassmannianShape, make_shape

GROUP_TOL = 1e-8
ROOT_TOL = 1e-6


class ConvergenceError(RuntimeError):
    pass


def _as_float(matrix) -> np.ndarray:
    if isinstance(matrix, C1Matrix):
        matrix = matrix.entries
    return np.asarray(matrix, dtype=float)


def eigenvalues(matrix, tol: float = GROUP_TOL) -> np.ndarray:
    """All eigenvalues with multiplicity, sorted by decreasing modulus then argument.

    The residual check compares the eigenvalue sum with the trace; a
    mismatch beyond tol * ||M|| * size is reported as non-convergence.
    """
    a = _as_float(matrix)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    try:
        eigs = np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(str(exc)) from exc
    scale = max(np.linalg.norm(a, 1), 1.0)
    if abs(eigs.sum() - np.trace(a)) > tol * scale * max(len(a), 1):
        raise ConvergenceError("eigenvalue sum drifted from the trace")
    order = np.lexsort((np.mod(np.angle(eigs), 2 * np.pi), -np.round(np.abs(eigs), 9)))
    return eigs[order]


def perron_root(matrix, tol: float = 1e-12, max_iter: int = 200_000, shift: Optional[float] = None):
    """Perron root and positive eigenvector of an irreducible nonnegative matrix.

    Power iteration on M + shift*I from the all-ones vector.  The shift
    makes the iteration matrix primitive even when M is periodic; it
    defaults to the mean column sum, which sits inside the Collatz-Wielandt
    bracket and keeps the peripheral eigenvalues well separated after the
    shift.  Iteration stops when the bracket
    min (Mx)_i / x_i <= delta0 <= max (Mx)_i / x_i
    is narrower than tol * delta0.
    """
    a = _as_float(matrix)
    if (a < 0).any():
        raise ValueError("matrix must be entrywise nonnegative")
    size = len(a)
    if size == 1:
        return float(a[0, 0]), np.ones(1)
    if shift is None:
        shift = float(a.sum(axis=0).mean())
    x = np.ones(size) / size
    lo = hi = 0.0
    for _ in range(max_iter):
        y = a @ x
        if (x <= 0).any():
            raise ConvergenceError("iterate lost positivity; matrix reducible?")
        ratios = y / x
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= tol * max(hi, 1e-300):
            value = 0.5 * (lo + hi)
            return float(value), x / x.sum()
        x = y + shift * x
        x /= x.sum()
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} steps (bracket [{lo}, {hi}])"
    )


@dataclass
class PropertyOReport:
    k: Optional[int]
    n: Optional[int]
    fano_index: int
    delta0: Optional[float]
    eigenvalues: List[Tuple[float, float]]
    max_modulus_count: int
    condition1: bool
    condition2: bool
    exact_verdict: Optional[bool] = None
    strongly_connected: Optional[bool] = None
    period: Optional[int] = None
    perron_delta0: Optional[float] = None
    tolerances: dict = field(default_factory=dict)
    note: str = "delta0 values are computed by this implementation"

    @property
    def numeric_verdict(self) -> bool:
        return self.condition1 and self.condition2

    @property
    def agreement(self) -> Optional[bool]:
        if self.exact_verdict is None:
            return None
        return self.exact_verdict == self.numeric_verdict

    @property
    def complex_eigenvalues(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.eigenvalues])

    def to_dict(self) -> dict:
        out = asdict(self)
        out["eigenvalues"] = [list(e) for e in self.eigenvalues]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "PropertyOReport":
        data = dict(data)
        data["eigenvalues"] = [tuple(e) for e in data["eigenvalues"]]
        return cls(**data)


def verify_property_o(
    eigs: Sequence[complex],
    r: int,
    delta0: Optional[float] = None,
    tol: float = GROUP_TOL,
    root_tol: float = ROOT_TOL,
) -> PropertyOReport:
    """Numeric check of both Property O conditions on a complete eigenvalue list.

    condition1: exactly one eigenvalue lies within delta0*tol of delta0, and it is real positive.
    condition2: the eigenvalues with |d| >= delta0 (1 - tol) are exactly r in number and
    match delta0 * exp(2 pi i j / r) one-to-one within delta0 * root_tol.
    """
    eigs = np.asarray(eigs, dtype=complex)
    if delta0 is None:
        delta0 = float(np.abs(eigs).max())
    near = eigs[np.abs(eigs - delta0) <= delta0 * tol]
    cond1 = (
        delta0 > 0
        and len(near) == 1
        and abs(near[0].imag) <= delta0 * tol
        and near[0].real > 0
    )
    peripheral = eigs[np.abs(eigs) >= delta0 * (1 - tol)]
    cond2 = len(peripheral) == r
    if cond2:
        targets = [delta0 * cmath.exp(2j * math.pi * j / r) for j in range(r)]
        unused = list(peripheral)
        for t in targets:
            dists = [abs(t - e) for e in unused]
            best = int(np.argmin(dists))
            if dists[best] > delta0 * root_tol:
                cond2 = False
                break
            unused.pop(best)
    return PropertyOReport(
        k=None,
        n=None,
        fano_index=r,
        delta0=float(delta0),
        eigenvalues=[(float(e.real), float(e.imag)) for e in eigs],
        max_modulus_count=int(len(peripheral)),
        condition1=bool(cond1),
        condition2=bool(cond2),
        tolerances={"group": tol, "root": root_tol},
    )


def exact_verdict(graph: QuantumBruhatGraph, r: int) -> bool:
    """Irreducible and period r: Property O with no floating point involved."""
    return strongly_connected(graph) and period(graph) == r


def property_o_report(
    shape: GrassmannianShape,
    mode: str = "both",
    tol: float = GROUP_TOL,
    root_tol: float = ROOT_TOL,
    window: str = STANDARD,
    c1: Optional[C1Matrix] = None,
) -> PropertyOReport:
    """Run the exact path, the numeric path, or both for one shape."""
    if mode not in ("exact", "numeric", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if c1 is None:
        c1 = build_c1_matrix(shape, window)
    r = shape.fano_index
    if mode == "exact":
        report = PropertyOReport(
            k=None, n=None, fano_index=r, delta0=None, eigenvalues=[],
            max_modulus_count=0, condition1=False, condition2=False,
        )
    else:
        eigs = eigenvalues(c1, tol)
        delta0 = float(np.abs(eigs).max())
        report = verify_property_o(eigs, r, delta0, tol, root_tol)
        try:
            report.perron_delta0, _ = perron_root(c1)
        except ConvergenceError:
            report.perron_delta0 = None
    report.k, report.n = shape.k, shape.n
    if mode != "numeric":
        graph = build_graph(c1)
        report.strongly_connected = strongly_connected(graph)
        report.period = period(graph) if report.strongly_connected else None
        report.exact_verdict = report.strongly_connected and report.period == r
    return report


def verify_shape(k: int, n: int, **kwargs) -> PropertyOReport:
    return property_o_report(make_shape(k, n), **kwargs)
