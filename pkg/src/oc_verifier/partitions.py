"""Index sets of Schubert classes on the odd-symplectic Grassmannian IG(k, 2n+1).

Partitions are plain tuples of ints of length exactly k.  The "odd" set
holds the shifted partitions (parts may be -1) used as the Schubert basis;
the "even" set holds the same diagrams with the full first column put back,
i.e. the (n+1-k)-strict partitions of the ambient IG(k, 2n+2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Tuple

Partition = Tuple[int, ...]


@dataclass(frozen=True)
class GrassmannianShape:
    """The pair (k, n) of IG(k, 2n+1), with derived constants."""

    k: int
    n: int
    dimension: int = field(init=False)
    fano_index: int = field(init=False)
    max_part: int = field(init=False)
    strictness: int = field(init=False)

    def __post_init__(self):
        k, n = self.k, self.n
        object.__setattr__(self, "dimension", k * (2 * n + 1 - k) - k * (k - 1) // 2)
        object.__setattr__(self, "fano_index", 2 * n + 2 - k)
        object.__setattr__(self, "max_part", 2 * n + 1 - k)
        object.__setattr__(self, "strictness", n - k)

    @property
    def r(self) -> int:
        return self.fano_index

    @property
    def even_strictness(self) -> int:
        """Strictness n+1-k of the even partitions (also the number of 'short' columns)."""
        return self.n + 1 - self.k

    @property
    def even_max_part(self) -> int:
        return 2 * self.n + 2 - self.k

    def __str__(self):
        return f"IG({self.k}, {2 * self.n + 1})"


def make_shape(k: int, n: int) -> GrassmannianShape:
    k, n = int(k), int(n)
    if n < 1:
        raise ValueError(f"n must be positive, got n={n}")
    if k < 1:
        raise ValueError(f"k must be positive, got k={k}")
    if k == n + 1:
        raise ValueError(
            f"k = n+1 = {k} gives the Lagrangian Grassmannian IG({n}, {2 * n}); "
            "only 1 <= k <= n is supported"
        )
    if k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return GrassmannianShape(k, n)


def is_valid_odd(shape: GrassmannianShape, parts: Sequence[int]) -> bool:
    k, t = shape.k, shape.strictness
    parts = tuple(parts)
    if len(parts) != k:
        return False
    if parts[0] > shape.max_part or parts[-1] < -1:
        return False
    for a, b in zip(parts, parts[1:]):
        if a < b or (a > t and a == b):
            return False
    if parts[-1] == -1 and parts[0] != shape.max_part:
        return False
    return True


def is_valid_even(shape: GrassmannianShape, parts: Sequence[int], contained: bool = True) -> bool:
    """(n+1-k)-strict partition with parts in [0, 2n+2-k].

    With ``contained`` (the default) also require the diagram to sit inside
    the odd-symplectic Grassmannian: a short first column forces a full first row.
    """
    k, t = shape.k, shape.even_strictness
    parts = tuple(parts)
    if len(parts) != k:
        return False
    if parts[0] > shape.even_max_part or parts[-1] < 0:
        return False
    for a, b in zip(parts, parts[1:]):
        if a < b or (a > t and a == b):
            return False
    if contained and parts[-1] == 0 and parts[0] != shape.even_max_part:
        return False
    return True


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


def _strict_sequences(length: int, top: int, bottom: int, strictness: int):
    # weakly decreasing sequences in [bottom, top], strict above `strictness`
    def rec(prefix, hi):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for p in range(hi, bottom - 1, -1):
            if prefix and p == prefix[-1] and p > strictness:
                continue
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], top)


def basis_order_key(parts: Partition):
    return (sum(parts), tuple(-p for p in parts))


@lru_cache(maxsize=None)
def enumerate_basis(shape: GrassmannianShape) -> Tuple[Partition, ...]:
    """All of Lambda in canonical order: ascending weight, then lex-descending parts."""
    found = [
        p
        for p in _strict_sequences(shape.k, shape.max_part, -1, shape.strictness)
        if p[-1] >= 0 or p[0] == shape.max_part
    ]
    return tuple(sorted(found, key=basis_order_key))


@lru_cache(maxsize=None)
def enumerate_even(shape: GrassmannianShape, contained: bool = False) -> Tuple[Partition, ...]:
    """Even (n+1-k)-strict partitions; all of them index classes on IG(k, 2n+2)."""
    found = [
        p
        for p in _strict_sequences(shape.k, shape.even_max_part, 0, shape.even_strictness)
        if not contained or p[-1] > 0 or p[0] == shape.even_max_part
    ]
    return tuple(sorted(found, key=basis_order_key))


@lru_cache(maxsize=None)
def basis_index(shape: GrassmannianShape) -> dict:
    return {p: i for i, p in enumerate(enumerate_basis(shape))}


def to_even(shape: GrassmannianShape, lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not is_valid_odd(shape, lam):
        raise ValueError(f"{format_partition(lam)} is not a basis partition of {shape}")
    return tuple(p + 1 for p in lam)


def from_even(shape: GrassmannianShape, lam_ev: Sequence[int]) -> Partition:
    lam_ev = tuple(lam_ev)
    if not is_valid_even(shape, lam_ev, contained=True):
        raise ValueError(
            f"{format_partition(lam_ev)} is not an even partition contained in {shape}"
        )
    return tuple(p - 1 for p in lam_ev)


def point_partition(shape: GrassmannianShape) -> Partition:
    """rho = (2n-k+1, 2n-k, ..., 2n-2k+2), the class of a point."""
    top = shape.max_part
    return tuple(top - i for i in range(shape.k))


def zero_partition(shape: GrassmannianShape) -> Partition:
    return (0,) * shape.k


def parse_partition(text: str) -> Partition:
    """Parse '3,-1' (spaces and surrounding parentheses tolerated)."""
    body = text.strip().strip("()[]")
    if not body:
        raise ValueError("empty partition string")
    try:
        return tuple(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)
