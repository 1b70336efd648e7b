"""The matrix of quantum multiplication by c1 at q = 1, the operator T, and Chevalley chains.

M[i, j] is the coefficient of basis[i] in c1 * basis[j]; c1 = r [X(1)], so
every nonzero entry is r * 2^A (classical) or r (quantum).  T is the sum of
M^i for i = 0..dim IG; since M >= 0 entrywise, T[mu, lam] > 0 iff there is a
directed path lam -> mu of length at most dim IG.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .chevalley import STANDARD, chevalley_mult
from .partitions import (
    GrassmannianShape,
    Partition,
    basis_index,
    enumerate_basis,
    format_partition,
    is_valid_odd,
    point_partition,
    zero_partition,
)


class ChainError(RuntimeError):
    """A prescribed Chevalley edge is missing from the computed expansion."""


@dataclass(frozen=True, eq=False)
class C1Matrix:
    shape: GrassmannianShape
    basis: Tuple[Partition, ...]
    entries: np.ndarray
    quantum: np.ndarray  # boolean mask of entries coming from q-terms
    window: str = STANDARD

    @property
    def index(self) -> Dict[Partition, int]:
        return basis_index(self.shape)

    def __len__(self):
        return len(self.basis)


def build_c1_matrix(shape: GrassmannianShape, window: str = STANDARD) -> C1Matrix:
    basis = enumerate_basis(shape)
    index = basis_index(shape)
    size = len(basis)
    entries = np.zeros((size, size), dtype=np.int64)
    quantum = np.zeros((size, size), dtype=bool)
    r = shape.fano_index
    for j, lam in enumerate(basis):
        for term in chevalley_mult(shape, lam, window).terms:
            i = index[term.partition]
            entries[i, j] += r * term.coefficient
            if term.q_degree:
                quantum[i, j] = True
    return C1Matrix(shape, basis, entries, quantum, window)


def _adjacency_lists(c1: C1Matrix) -> List[List[int]]:
    nz = c1.entries != 0
    return [list(np.flatnonzero(nz[:, j])) for j in range(len(c1))]


def reachability_T(shape: GrassmannianShape, c1: Optional[C1Matrix] = None) -> np.ndarray:
    """Boolean matrix P with P[mu, lam] true iff T[X(lam)] has a positive [X(mu)] coefficient.

    Computed as (I + A)^dim over the boolean semiring by repeated squaring.
    """
    if c1 is None:
        c1 = build_c1_matrix(shape)
    size = len(c1)
    step = (c1.entries != 0) | np.eye(size, dtype=bool)
    result = np.eye(size, dtype=bool)
    e = shape.dimension
    # int32 matmul of 0/1 matrices cannot overflow for size < 2**31
    while e:
        if e & 1:
            result = (step.astype(np.int32) @ result.astype(np.int32)) > 0
        e >>= 1
        if e:
            step = (step.astype(np.int32) @ step.astype(np.int32)) > 0
    return result


def bfs_distances(adjacency: Sequence[Sequence[int]], source: int, limit: Optional[int] = None):
    """Breadth-first distances and parents from `source`; unreached vertices get -1."""
    dist = [-1] * len(adjacency)
    parent = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def reachability_T_bfs(shape: GrassmannianShape, c1: Optional[C1Matrix] = None) -> np.ndarray:
    """Same matrix as `reachability_T`, by one depth-capped BFS per source vertex."""
    if c1 is None:
        c1 = build_c1_matrix(shape)
    adj = _adjacency_lists(c1)
    out = np.zeros((len(c1), len(c1)), dtype=bool)
    for j in range(len(c1)):
        dist, _ = bfs_distances(adj, j, shape.dimension)
        out[:, j] = np.asarray(dist) >= 0
    return out


def exact_T(shape: GrassmannianShape, c1: Optional[C1Matrix] = None) -> np.ndarray:
    """T = sum_{i=0}^{dim} M^i with Python integers (object array); small bases only."""
    if c1 is None:
        c1 = build_c1_matrix(shape)
    m = c1.entries.astype(object)
    power = np.eye(len(c1), dtype=np.int64).astype(object)
    total = power.copy()
    for _ in range(shape.dimension):
        power = m.dot(power)
        total = total + power
    return total


def _path(parent, source, target):
    if source == target:
        return [source]
    if parent[target] < 0:
        return None
    out = [target]
    while out[-1] != source:
        out.append(parent[out[-1]])
    return out[::-1]


@dataclass
class PositivityReport:
    shape: GrassmannianShape
    a: bool
    b: bool
    c: bool
    witnesses: Dict[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.a and self.b and self.c

    def to_dict(self) -> dict:
        return {
            "k": self.shape.k,
            "n": self.shape.n,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "witnesses": self.witnesses,
        }


def verify_theorem_positive(shape: GrassmannianShape, c1: Optional[C1Matrix] = None) -> PositivityReport:
    """Check the three positivity statements for T with shortest-path witnesses.

    (a) every lam reaches rho, (b) rho reaches (0), (c) (0) reaches every mu,
    each within dim IG edges.
    """
    if c1 is None:
        c1 = build_c1_matrix(shape)
    basis = c1.basis
    adj = _adjacency_lists(c1)
    radj: List[List[int]] = [[] for _ in basis]
    for u, outs in enumerate(adj):
        for v in outs:
            radj[v].append(u)
    index = basis_index(shape)
    rho, zero = index[point_partition(shape)], index[zero_partition(shape)]
    dim = shape.dimension

    def label(path):
        return [list(basis[i]) for i in path]

    # (a): BFS on reversed edges from rho gives distance lam -> rho
    dist_to_rho, par_rev = bfs_distances(radj, rho)
    a_paths = {}
    a_ok = True
    for i, lam in enumerate(basis):
        d = dist_to_rho[i]
        if d < 0 or d > dim:
            a_ok = False
            continue
        path = _path(par_rev, rho, i)[::-1]
        a_paths[format_partition(lam)] = label(path)

    dist_rho, par_rho = bfs_distances(adj, rho)
    b_path = _path(par_rho, rho, zero)
    b_ok = b_path is not None and len(b_path) - 1 <= dim

    dist_zero, par_zero = bfs_distances(adj, zero)
    c_ok = all(0 <= d <= dim for d in dist_zero)
    c_paths = {
        format_partition(mu): label(_path(par_zero, zero, i))
        for i, mu in enumerate(basis)
        if dist_zero[i] >= 0
    }
    witnesses = {
        "a": a_paths,
        "b": label(b_path) if b_path is not None else None,
        "c": c_paths,
    }
    return PositivityReport(shape, a_ok, b_ok, c_ok, witnesses)


@dataclass
class ConjectureReport:
    shape: GrassmannianShape
    holds: bool
    failing_pairs: List[Tuple[Partition, Partition]]

    def to_dict(self) -> dict:
        return {
            "k": self.shape.k,
            "n": self.shape.n,
            "holds": self.holds,
            "failing_pairs": [[list(lam), list(mu)] for lam, mu in self.failing_pairs],
        }


def verify_conjecture_T_positive(shape: GrassmannianShape, c1: Optional[C1Matrix] = None) -> ConjectureReport:
    """Is T[X(lam)] > 0 for every lam?  Failing (lam, mu) pairs are listed, not raised."""
    if c1 is None:
        c1 = build_c1_matrix(shape)
    reach = reachability_T(shape, c1)
    rows, cols = np.nonzero(~reach)
    pairs = [(c1.basis[j], c1.basis[i]) for i, j in zip(rows, cols)]
    return ConjectureReport(shape, not pairs, pairs)


@dataclass
class ChevalleyChain:
    vertices: List[Partition]
    edge_kinds: List[str]
    edge_coefficients: List[int]
    note: str = ""

    @property
    def length(self) -> int:
        return len(self.edge_kinds)

    @property
    def q_degree(self) -> int:
        return sum(1 for kind in self.edge_kinds if kind != "cover")

    @property
    def coefficient(self) -> int:
        out = 1
        for c in self.edge_coefficients:
            out *= c
        return out

    def q_degrees(self) -> List[int]:
        """Accumulated q-degree after each edge."""
        out, acc = [], 0
        for kind in self.edge_kinds:
            acc += kind != "cover"
            out.append(acc)
        return out

    def to_dict(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edge_kinds": list(self.edge_kinds),
            "edge_coefficients": list(self.edge_coefficients),
            "q_degrees": self.q_degrees(),
            "coefficient": self.coefficient,
            "q_degree": self.q_degree,
            "note": self.note,
        }


def _validated_chain(shape, vertices, window=STANDARD, note="") -> ChevalleyChain:
    kinds, coeffs = [], []
    for lam, mu in zip(vertices, vertices[1:]):
        match = [t for t in chevalley_mult(shape, lam, window).terms if t.partition == mu]
        if not match or match[0].coefficient <= 0:
            raise ChainError(
                f"no Chevalley edge {format_partition(lam)} -> {format_partition(mu)} in {shape}"
            )
        kinds.append(match[0].kind)
        coeffs.append(match[0].coefficient)
    return ChevalleyChain(list(vertices), kinds, coeffs, note)


def _add_box_topmost(shape, lam):
    for i in range(shape.k):
        cand = lam[:i] + (lam[i] + 1,) + lam[i + 1:]
        if is_valid_odd(shape, cand):
            return cand
    return None


def chain_to_point(shape: GrassmannianShape, lam: Sequence[int], window: str = STANDARD) -> ChevalleyChain:
    """lam -> ... -> rho, adding one box per step to the topmost row that admits it."""
    lam = tuple(lam)
    if not is_valid_odd(shape, lam):
        raise ValueError(f"{format_partition(lam)} is not a basis partition of {shape}")
    rho = point_partition(shape)
    vertices = [lam]
    while vertices[-1] != rho:
        nxt = _add_box_topmost(shape, vertices[-1])
        if nxt is None:
            raise ChainError(f"no single-box extension of {format_partition(vertices[-1])}")
        vertices.append(nxt)
    return _validated_chain(shape, vertices, window, note="tie-break: topmost admissible row")


def chain_point_to_zero(shape: GrassmannianShape, window: str = STANDARD) -> ChevalleyChain:
    """rho -> (0): take eta* when the first row is full, otherwise grow the first row."""
    top = shape.max_part
    eta = point_partition(shape)
    zero = zero_partition(shape)
    vertices = [eta]
    while eta != zero:
        if eta[0] == top:
            eta = eta[1:] + (0,)
        else:
            eta = (eta[0] + 1,) + eta[1:]
        vertices.append(eta)
    return _validated_chain(shape, vertices, window)


def chain_zero_to(shape: GrassmannianShape, lam: Sequence[int], window: str = STANDARD) -> ChevalleyChain:
    """(0) -> ... -> lam with exactly |lam| edges.

    Rows are filled top to bottom.  When lam ends in -1 the chain first runs
    (0) -> (1) -> ... -> (2n-2k+1) -> (2n+1-k, -1, ..., -1).
    """
    lam = tuple(lam)
    if not is_valid_odd(shape, lam):
        raise ValueError(f"{format_partition(lam)} is not a basis partition of {shape}")
    k = shape.k
    zero = zero_partition(shape)
    vertices = [zero]
    if lam[-1] >= 0:
        start = zero
    else:
        for j in range(1, 2 * shape.n - 2 * k + 2):
            vertices.append((j,) + (0,) * (k - 1))
        start = (shape.max_part,) + (-1,) * (k - 1)
        vertices.append(start)
    cur = list(start)
    for i in range(k):
        while cur[i] < lam[i]:
            cur[i] += 1
            vertices.append(tuple(cur))
    return _validated_chain(shape, vertices, window)


def canonical_cycle(shape: GrassmannianShape, window: str = STANDARD) -> ChevalleyChain:
    """(0) -> (1) -> ... -> (2n+1-k) -> (0), closed by the lam* quantum term."""
    k = shape.k
    vertices = [(j,) + (0,) * (k - 1) for j in range(shape.max_part + 1)]
    vertices.append(zero_partition(shape))
    return _validated_chain(shape, vertices, window)
