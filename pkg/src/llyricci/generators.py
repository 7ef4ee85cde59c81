"""Standard graph families."""

from __future__ import annotations

from .errors import ArgumentError
from .graph import Graph


def hypercube(d: int) -> Graph:
    """Q_d on bitmasks ``0..2**d - 1``; adjacent iff Hamming distance 1."""
    if d < 1:
        raise ArgumentError(f"hypercube dimension must be >= 1, got {d}")
    n = 1 << d
    return Graph(n, [[v ^ (1 << b) for b in range(d)] for v in range(n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ArgumentError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ArgumentError(f"path needs at least 1 vertex, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ArgumentError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ArgumentError(f"complete bipartite sides must be >= 1, got ({a}, {b})")
    return Graph.from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 with ``n`` leaves."""
    if n < 1:
        raise ArgumentError(f"star needs at least 1 leaf, got {n}")
    return complete_bipartite(1, n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(10, outer + spokes + inner)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H with vertex ``(u, a)`` encoded as ``u * h.n + a``."""
    k = h.n
    edges = []
    for u in range(g.n):
        for a, b in h.edges:
            edges.append((u * k + a, u * k + b))
    for u, v in g.edges:
        for a in range(k):
            edges.append((u * k + a, v * k + a))
    return Graph.from_edge_list(g.n * k, edges)


def cartesian_power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise ArgumentError(f"power must be >= 1, got {k}")
    out = g
    for _ in range(k - 1):
        out = cartesian_product(out, g)
    return out


FAMILIES = {
    "hypercube": (hypercube, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "petersen": (petersen, 0),
}
