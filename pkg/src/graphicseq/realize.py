"""Simple graphs and Havel–Hakimi realization."""

from dataclasses import dataclass, field

import numpy as np

from .errors import NonGraphic
from .sequence import DegreeSequence, from_unsorted

__all__ = ["Graph", "havel_hakimi", "degrees_of", "format_edges"]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. vertex_count - 1``.

    Edges are stored as ``(u, v)`` with ``u < v``, sorted lexicographically.
    """

    vertex_count: int
    edges: tuple = field(default=())

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def degrees(self):
        """Per-vertex degrees indexed by label."""
        deg = np.zeros(self.vertex_count, dtype=np.int64)
        if self.edges:
            ends = np.asarray(self.edges, dtype=np.int64).reshape(-1)
            deg += np.bincount(ends, minlength=self.vertex_count)
        return deg

    def adjacency(self):
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def degrees_of(g):
    return from_unsorted(g.degrees())


def havel_hakimi(a):
    """Realize ``a`` as a simple graph or raise NonGraphic.

    Vertex ``i`` receives degree ``a[i]``. Residual degrees are tracked in
    buckets, so each step only touches the vertices it connects.
    """
    if not isinstance(a, DegreeSequence):
        a = DegreeSequence(a)
    n = a.n
    if a.s % 2:
        raise NonGraphic(f"odd degree sum {a.s}")
    if n and a[0] > n - 1:
        raise NonGraphic(f"degree {int(a[0])} exceeds n - 1 = {n - 1}")
    residual = a.tolist()
    top = residual[0] if n else 0
    # iterate in reverse so pops take the lowest label first
    buckets = [[] for _ in range(top + 1)]
    for v in range(n - 1, -1, -1):
        if residual[v]:
            buckets[residual[v]].append(v)

    edges = []
    while top > 0:
        if not buckets[top]:
            top -= 1
            continue
        v = buckets[top].pop()
        want = need = residual[v]
        residual[v] = 0
        chosen = []
        level = top
        while need and level > 0:
            bucket = buckets[level]
            while need and bucket:
                chosen.append(bucket.pop())
                need -= 1
            if need:
                level -= 1
        if need:
            raise NonGraphic(f"vertex {v} needs {want} neighbours, only {len(chosen)} available")
        # re-bucket only after selection so a vertex is not picked twice
        for u in reversed(chosen):
            edges.append((v, u) if v < u else (u, v))
            residual[u] -= 1
            if residual[u]:
                buckets[residual[u]].append(u)
    return Graph(n, tuple(edges))


def format_edges(g):
    return "".join(f"{u} {v}\n" for u, v in g.edges)
