"""Immutable simple undirected graphs on vertices ``0..n-1``.

Distances are computed by BFS and cached per root; the all-pairs matrix is
only built when asked for.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import ArgumentError, ConstructionError, DisconnectedError


class Graph:
    __slots__ = ("n", "adj", "_nbr_sets", "edges", "_dist", "_connected")

    def __init__(self, n: int, adjacency: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adjacency)
        self._nbr_sets = tuple(frozenset(a) for a in self.adj)
        self.edges = tuple((u, v) for u in range(n) for v in self.adj[u] if u < v)
        self._dist = {}
        self._connected = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ArgumentError(f"vertex count must be >= 0, got {n}")
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ConstructionError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", (u, v))
            if u == v:
                raise ConstructionError(f"loop at vertex {u}", (u, v))
            if v in adjacency[u]:
                raise ConstructionError(f"duplicate edge ({u}, {v})", (u, v))
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, adjacency)

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v] + (v,)))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- metric --------------------------------------------------------

    def bfs_distances(self, x: int) -> tuple[int | None, ...]:
        """Distances from ``x``; ``None`` marks unreachable vertices."""
        row = self._dist.get(x)
        if row is None:
            dist: list[int | None] = [None] * self.n
            dist[x] = 0
            queue = deque([x])
            while queue:
                u = queue.popleft()
                du = dist[u] + 1
                for w in self.adj[u]:
                    if dist[w] is None:
                        dist[w] = du
                        queue.append(w)
            row = tuple(dist)
            self._dist[x] = row
        return row

    def distance(self, u: int, v: int) -> int:
        d = self.bfs_distances(u)[v]
        if d is None:
            raise DisconnectedError(f"no path between {u} and {v}")
        return d

    def all_distances(self) -> list[tuple[int | None, ...]]:
        return [self.bfs_distances(x) for x in range(self.n)]

    def is_connected(self) -> bool:
        if self._connected is None:
            self._connected = self.n == 0 or None not in self.bfs_distances(0)
        return self._connected

    def diameter(self) -> int:
        if not self.is_connected():
            raise DisconnectedError("diameter of a disconnected graph is infinite")
        return max((max(self.bfs_distances(x)) for x in range(self.n)), default=0)

    def layers(self, x: int) -> list[list[int]]:
        """BFS layers ``N_0(x), N_1(x), ...`` over the component of ``x``."""
        out: list[list[int]] = []
        for v, d in enumerate(self.bfs_distances(x)):
            if d is None:
                continue
            while len(out) <= d:
                out.append([])
            out[d].append(v)
        return out

    def two_coloring(self) -> list[int] | None:
        """Proper 2-coloring, or ``None`` when the graph has an odd cycle."""
        color: list[int | None] = [None] * self.n
        for s in range(self.n):
            if color[s] is not None:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if color[w] is None:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None


# -- forbidden cycles ------------------------------------------------------


def find_c3(g: Graph) -> tuple[int, int, int] | None:
    for u, v in g.edges:
        common = g._nbr_sets[u] & g._nbr_sets[v]
        if common:
            return (u, v, min(common))
    return None


def find_c5(g: Graph) -> tuple[int, ...] | None:
    """A 5-cycle subgraph as a vertex sequence, or ``None``.

    DFS from each start vertex ``s`` over paths whose other vertices all
    exceed ``s``, so each cycle is only searched from its smallest vertex.
    """
    for s in range(g.n):
        path = [s]

        def extend(u):
            if len(path) == 5:
                return tuple(path) if g.has_edge(u, s) else None
            for w in g.adj[u]:
                if w > s and w not in path:
                    path.append(w)
                    hit = extend(w)
                    if hit:
                        return hit
                    path.pop()
            return None

        hit = extend(s)
        if hit:
            return hit
    return None


def has_c3(g: Graph) -> bool:
    return find_c3(g) is not None


def has_c5(g: Graph) -> bool:
    return find_c5(g) is not None
