"""Independent reference computations used by the tests.

Nothing here calls into the enumeration or Chevalley code paths it checks.
"""
import itertools
from functools import lru_cache
from math import gcd

import networkx as nx
import numpy as np


def brute_force_basis(k, n):
    """Filter every length-k sequence in [-1, 2n+1-k]^k by the defining conditions."""
    top = 2 * n + 1 - k
    out = []
    for seq in itertools.product(range(-1, top + 1), repeat=k):
        if any(seq[i] < seq[i + 1] for i in range(k - 1)):
            continue
        if any(seq[i] == seq[i + 1] and seq[i] > n - k for i in range(k - 1)):
            continue
        if seq[-1] == -1 and seq[0] != top:
            continue
        out.append(seq)
    return out


def count_skew_syt(outer, inner):
    """Standard Young tableaux of skew shape outer/inner, by peeling corners."""
    inner = tuple(inner)

    @lru_cache(maxsize=None)
    def count(shape):
        if shape == inner:
            return 1
        total = 0
        for i, row in enumerate(shape):
            below = shape[i + 1] if i + 1 < len(shape) else 0
            if row > inner[i] and row > below:
                total += count(shape[:i] + (row - 1,) + shape[i + 1:])
        return total

    return count(tuple(outer))


def degree_odd_symplectic(k, n):
    """deg IG(k, 2n+1) in the Pluecker embedding.

    IG is the zero locus in Gr(k, 2n+1) of a section of wedge^2 S^*, whose top
    Chern class is the staircase Schubert class; so the degree counts standard
    tableaux of the k x (2n+1-k) rectangle minus the staircase (k-1, ..., 0).
    """
    return count_skew_syt((2 * n + 1 - k,) * k, tuple(range(k - 1, -1, -1)))


def degree_symplectic(k, N):
    """deg IG(k, 2N), same argument inside Gr(k, 2N)."""
    return count_skew_syt((2 * N - k,) * k, tuple(range(k - 1, -1, -1)))


def cycle_gcd(adjacency):
    """gcd of all simple cycle lengths (exponential; small graphs only)."""
    g = nx.DiGraph()
    g.add_nodes_from(range(len(adjacency)))
    g.add_edges_from((u, v) for u, outs in enumerate(adjacency) for v in outs)
    out = 0
    for cyc in nx.simple_cycles(g):
        out = gcd(out, len(cyc))
    return out


def closed_walk_gcd(adjacency, vertex=0, max_len=None):
    """gcd of closed-walk lengths through `vertex`, by boolean powers up to max_len."""
    size = len(adjacency)
    a = np.zeros((size, size), dtype=np.int64)
    for u, outs in enumerate(adjacency):
        for v in outs:
            a[u, v] = 1
    max_len = max_len or 3 * size
    power = np.eye(size, dtype=np.int64)
    out = 0
    for m in range(1, max_len + 1):
        power = ((power @ a) > 0).astype(np.int64)
        if power[vertex, vertex]:
            out = gcd(out, m)
    return out


SWEEP6 = [(k, n) for n in range(1, 7) for k in range(1, n + 1)]
SWEEP5 = [(k, n) for n in range(1, 6) for k in range(1, n + 1)]
