"""The quantum Bruhat digraph D(M), strong connectivity and period."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, TextIO, Tuple

import numpy as np

from .operator import C1Matrix
from .partitions import Partition, format_partition


@dataclass(frozen=True, eq=False)
class QuantumBruhatGraph:
    vertices: Tuple[Partition, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    quantum_edges: frozenset = frozenset()  # (u, v) pairs coming from q-terms

    def __len__(self):
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(out) for out in self.adjacency)

    def edges(self):
        for u, outs in enumerate(self.adjacency):
            for v in outs:
                yield u, v

    def out_neighbors(self, lam: Sequence[int]) -> List[Partition]:
        u = self.vertices.index(tuple(lam))
        return [self.vertices[v] for v in self.adjacency[u]]

    def permuted(self, order: Sequence[int]) -> "QuantumBruhatGraph":
        """Same graph with vertices listed as self.vertices[order[0]], ..."""
        new_of_old = {old: new for new, old in enumerate(order)}
        verts = tuple(self.vertices[old] for old in order)
        adj = tuple(
            tuple(sorted(new_of_old[v] for v in self.adjacency[old])) for old in order
        )
        q = frozenset((new_of_old[u], new_of_old[v]) for u, v in self.quantum_edges)
        return QuantumBruhatGraph(verts, adj, q)


def build_graph(c1: C1Matrix) -> QuantumBruhatGraph:
    """Edge lam -> mu iff M[mu, lam] > 0."""
    nz = c1.entries > 0
    adj = tuple(tuple(int(i) for i in np.flatnonzero(nz[:, j])) for j in range(len(c1)))
    q_rows, q_cols = np.nonzero(c1.quantum & nz)
    quantum = frozenset((int(j), int(i)) for i, j in zip(q_rows, q_cols))
    return QuantumBruhatGraph(tuple(c1.basis), adj, quantum)


def graph_from_edges(vertices: Sequence, edges) -> QuantumBruhatGraph:
    """Plain digraph on `vertices` (any hashables) from (u, v) index pairs."""
    outs: List[List[int]] = [[] for _ in vertices]
    for u, v in edges:
        outs[u].append(v)
    return QuantumBruhatGraph(tuple(vertices), tuple(tuple(sorted(set(o))) for o in outs))


def strongly_connected_components(graph: QuantumBruhatGraph) -> List[List[int]]:
    """Tarjan's algorithm, iterative.  Components come out in reverse topological order."""
    n = len(graph)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            outs = graph.adjacency[v]
            if i < len(outs):
                work[-1] = (v, i + 1)
                w = outs[i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def strongly_connected(graph: QuantumBruhatGraph) -> bool:
    # a single vertex counts as strongly connected, with or without a loop
    if len(graph) == 0:
        raise ValueError("empty graph")
    return len(strongly_connected_components(graph)) == 1


def period(graph: QuantumBruhatGraph, root: int = 0) -> int:
    """gcd of all cycle lengths, from BFS levels: gcd over edges (u, v) of lvl(u) + 1 - lvl(v)."""
    if not strongly_connected(graph):
        raise ValueError("period is only defined here for strongly connected graphs")
    level = [-1] * len(graph)
    level[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u, v in graph.edges():
        g = gcd(g, abs(level[u] + 1 - level[v]))
    # no edges at all: a lone vertex without a loop has no cycles
    return g


def export_dot(graph: QuantumBruhatGraph, writer: Optional[TextIO] = None, name: str = "QBG") -> str:
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(graph.vertices):
        label = format_partition(v) if isinstance(v, tuple) else str(v)
        lines.append(f'  v{i} [label="{label}"];')
    for u, v in graph.edges():
        style = ' [style=dashed, color=blue, label="q"]' if (u, v) in graph.quantum_edges else ""
        lines.append(f"  v{u} -> v{v}{style};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if writer is not None:
        writer.write(text)
    return text
