"""Isomorphism-free enumeration of small connected graphs.

Graphs on ``n`` vertices are grown from the classes on ``n - 1`` vertices by
attaching a new vertex to a non-empty neighbor set. Every connected graph
has a non-cut vertex, and the supported filters are closed under vertex
deletion, so this reaches every class. Duplicates are removed with a
canonical code: iterated degree refinement splits vertices into ordered
cells and the lexicographically largest adjacency code over all
cell-respecting orderings is kept.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from .errors import ArgumentError, ScaleError
from .graph import Graph, has_c3, has_c5

MAX_ENUM_N = 7
FILTERS = ("none", "triangle_free", "c3c5_free")


def _refine(n: int, adj: list[frozenset]) -> list[list[int]]:
    color = [len(adj[v]) for v in range(n)]
    while True:
        sig = [(color[v], tuple(sorted(color[w] for w in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(color)):
            color = new
            break
        color = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> tuple[int, int]:
    """``(n, code)`` identical for isomorphic graphs and distinct otherwise."""
    n = g.n
    adj = [frozenset(a) for a in g.adj]
    cells = _refine(n, adj)
    slots = [(i, j) for j in range(n) for i in range(j)]
    best = -1
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = 0
        for i, j in slots:
            code = (code << 1) | (order[j] in adj[order[i]])
        if code > best:
            best = code
    return (n, best)


def graph_from_code(n: int, code: int) -> Graph:
    slots = [(i, j) for j in range(n) for i in range(j)]
    edges = [slots[k] for k in range(len(slots)) if code >> (len(slots) - 1 - k) & 1]
    return Graph.from_edge_list(n, edges)


def _passes(g: Graph, filt: str) -> bool:
    if filt == "none":
        return True
    if has_c3(g):
        return False
    return filt == "triangle_free" or not has_c5(g)


@lru_cache(maxsize=None)
def _classes(n: int, filt: str) -> tuple[tuple[int, int], ...]:
    if n == 1:
        return ((1, 0),)
    found = set()
    for _, code in _classes(n - 1, filt):
        base = graph_from_code(n - 1, code)
        for k in range(1, n):
            for nbrs in combinations(range(n - 1), k):
                g = Graph.from_edge_list(n, list(base.edges) + [(u, n - 1) for u in nbrs])
                if _passes(g, filt):
                    found.add(canonical_code(g))
    return tuple(sorted(found))


def enumerate_small_connected(n: int, filter: str = "none") -> Iterator[Graph]:
    """Yield one representative per isomorphism class, in canonical-code order."""
    if filter not in FILTERS:
        raise ArgumentError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    if n > MAX_ENUM_N:
        raise ScaleError(f"exhaustive enumeration stops at n = {MAX_ENUM_N}; ingest a graph6 corpus for n = {n}")
    if n < 1:
        raise ArgumentError(f"n must be >= 1, got {n}")
    for size, code in _classes(n, filter):
        yield graph_from_code(size, code)


def enumerate_up_to(n: int, filter: str = "none") -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from enumerate_small_connected(k, filter)
