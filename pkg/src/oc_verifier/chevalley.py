"""Quantum Chevalley rule: [X(1)] * [X(lam)] on IG(k, 2n+1).

The classical part comes from the arrow relation on even diagrams
(remove a vertical strip from the short columns, add a horizontal strip),
whose coefficients are powers of two counting certain connected pieces of
the added boxes.  The quantum part has at most two terms, q[X(lam*)] and
q[X(lam**)].
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence, Tuple

from .partitions import (
    GrassmannianShape,
    Partition,
    enumerate_basis,
    format_partition,
    is_valid_odd,
)

STANDARD = "standard"
PAPER_LITERAL = "paper_literal"
WINDOW_POLICIES = (STANDARD, PAPER_LITERAL)


class Box(NamedTuple):
    row: int
    col: int


class Term(NamedTuple):
    partition: Partition
    coefficient: int
    q_degree: int
    kind: str  # "cover", "quantum_star" or "quantum_star_star"


@dataclass(frozen=True)
class ChevalleyExpansion:
    source: Partition
    classical_terms: Tuple[Term, ...]
    quantum_terms: Tuple[Term, ...]

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self.classical_terms + self.quantum_terms

    def coefficient(self, mu: Sequence[int]) -> int:
        mu = tuple(mu)
        return sum(t.coefficient for t in self.terms if t.partition == mu)

    def to_dict(self) -> dict:
        def term(t):
            return {
                "partition": list(t.partition),
                "coefficient": t.coefficient,
                "q_degree": t.q_degree,
                "kind": t.kind,
            }

        return {
            "source": list(self.source),
            "classical_terms": [term(t) for t in self.classical_terms],
            "quantum_terms": [term(t) for t in self.quantum_terms],
        }

    def __str__(self):
        pieces = []
        for t in self.terms:
            c = "" if t.coefficient == 1 else f"{t.coefficient}"
            q = "" if t.q_degree == 0 else ("q" if t.q_degree == 1 else f"q^{t.q_degree}")
            pieces.append(f"{c}{q}[X({format_partition(t.partition)})]")
        return " + ".join(pieces) if pieces else "0"


def _check_window(window: str) -> str:
    window = window.replace("-", "_")
    if window not in WINDOW_POLICIES:
        raise ValueError(f"unknown window policy {window!r}; expected one of {WINDOW_POLICIES}")
    return window


def _relation_value(shape: GrassmannianShape, box) -> int:
    return abs(box[1] - (shape.n + 2 - shape.k)) + box[0]


def related(shape: GrassmannianShape, b1, b2) -> bool:
    """Boxes (row, col) of an even diagram that are (n+1-k)-related."""
    return _relation_value(shape, b1) == _relation_value(shape, b2)


def _column_length(parts: Sequence[int], col: int) -> int:
    return sum(1 for p in parts if p >= col)


def _components(boxes) -> list:
    # 8-connectivity: boxes touching at a corner are connected
    remaining = set(boxes)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp, stack = [seed], [seed]
        while stack:
            r, c = stack.pop()
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    nb = Box(r + dr, c + dc)
                    if nb in remaining:
                        remaining.remove(nb)
                        comp.append(nb)
                        stack.append(nb)
        comps.append(comp)
    return comps


def ev_arrow(
    shape: GrassmannianShape,
    lam_ev: Sequence[int],
    mu_ev: Sequence[int],
    window: str = STANDARD,
) -> Optional[int]:
    """Return N(lam, mu) if lam ->ev mu holds, else None.

    Both arguments are even (n+1-k)-strict partitions of length k; they need
    not lie in the odd-symplectic range, so the same routine serves IG(k, 2n+2).
    """
    window = _check_window(window)
    lam, mu = tuple(lam_ev), tuple(mu_ev)
    if len(lam) != shape.k or len(mu) != shape.k:
        raise ValueError("partitions must have length k")
    short = shape.n + 1 - shape.k
    axis = short + 1
    last_col = shape.even_max_part if window == STANDARD else shape.even_max_part - 1

    removed = [Box(i + 1, c) for i in range(shape.k) for c in range(mu[i] + 1, lam[i] + 1)]
    added = [Box(i + 1, c) for i in range(shape.k) for c in range(lam[i] + 1, mu[i] + 1)]

    if any(b.col > short for b in removed):
        return None
    if len({b.row for b in removed}) != len(removed):
        return None
    if len({b.col for b in added}) != len(added):
        return None

    mentioned = set()
    for c in range(1, short + 1):
        lc, mc = _column_length(lam, c), _column_length(mu, c)
        if lc == mc:
            if lc == 0:
                continue
            partners = [b for b in added if related(shape, (lc, c), b)]
            if len(partners) > 1:
                return None
            mentioned.update(partners)
        elif mc < lc:
            refs = [(r, c) for r in range(mc + 1, lc + 1)]
            if mc > 0:
                refs.append((mc, c))
            rows = set()
            for ref in refs:
                partners = [b for b in added if related(shape, ref, b)]
                if len(partners) != 1:
                    return None
                mentioned.add(partners[0])
                rows.add(partners[0].row)
            if len(rows) > 1:
                return None

    pool = [b for b in added if axis <= b.col <= last_col and b not in mentioned]
    return sum(1 for comp in _components(pool) if all(b.col != axis for b in comp))


def lambda_star(shape: GrassmannianShape, lam: Sequence[int]) -> Optional[Partition]:
    lam = tuple(lam)
    if lam[0] != shape.max_part or lam[-1] < 0:
        return None
    return lam[1:] + (0,)


def lambda_star_star(shape: GrassmannianShape, lam: Sequence[int]) -> Optional[Partition]:
    lam = tuple(lam)
    if shape.k < 2 or lam[0] != shape.max_part or lam[1] != shape.max_part - 1:
        return None
    return (lam[0],) + lam[2:] + (-1,)


@lru_cache(maxsize=None)
def _weight_buckets(shape: GrassmannianShape) -> dict:
    buckets: dict = {}
    for p in enumerate_basis(shape):
        buckets.setdefault(sum(p), []).append(p)
    return buckets


def covers(shape: GrassmannianShape, lam: Sequence[int], window: str = STANDARD):
    """All (mu, A(lam, mu)) with lam -> mu and |mu| = |lam| + 1."""
    lam = tuple(lam)
    if not is_valid_odd(shape, lam):
        raise ValueError(f"{format_partition(lam)} is not a basis partition of {shape}")
    lam_ev = tuple(p + 1 for p in lam)
    out = []
    for mu in _weight_buckets(shape).get(sum(lam) + 1, ()):
        a = ev_arrow(shape, lam_ev, tuple(p + 1 for p in mu), window)
        if a is not None:
            out.append((mu, a))
    return out


def chevalley_mult(shape: GrassmannianShape, lam: Sequence[int], window: str = STANDARD) -> ChevalleyExpansion:
    lam = tuple(lam)
    classical = tuple(Term(mu, 2**a, 0, "cover") for mu, a in covers(shape, lam, window))
    quantum = []
    star = lambda_star(shape, lam)
    if star is not None:
        quantum.append(Term(star, 1, 1, "quantum_star"))
    star2 = lambda_star_star(shape, lam)
    if star2 is not None:
        quantum.append(Term(star2, 1, 1, "quantum_star_star"))
    return ChevalleyExpansion(lam, classical, tuple(quantum))
