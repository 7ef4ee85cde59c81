"""Distance-layer decompositions around a root vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, DisconnectedError
from .graph import Graph


@dataclass(frozen=True)
class LayerPartition:
    """Neighbors of ``target`` split by their distance to ``root``.

    ``minus``/``zero``/``plus`` hold the neighbors at distance
    ``d(root, target) - 1``, ``d(root, target)`` and ``d(root, target) + 1``.
    """

    root: int
    target: int
    distance: int
    minus: frozenset
    zero: frozenset
    plus: frozenset


@dataclass(frozen=True)
class LayerEdgeProfile:
    root: int
    layers: tuple  # tuple of tuples, layers[i] = N_i(root)
    e_cross: tuple  # e_cross[i] = |E_{i,i+1}|
    e_flat: tuple  # e_flat[i] = |E_{i,i}|

    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]


def layer_partition(g: Graph, x: int, y: int) -> LayerPartition:
    if x == y:
        raise ArgumentError("layer partition needs two distinct vertices")
    dist = g.bfs_distances(x)
    dy = dist[y]
    if dy is None:
        raise DisconnectedError(f"{y} is not reachable from {x}")
    parts = {-1: set(), 0: set(), 1: set()}
    for u in g.adj[y]:
        parts[dist[u] - dy].add(u)
    return LayerPartition(x, y, dy, frozenset(parts[-1]), frozenset(parts[0]), frozenset(parts[1]))


def layer_edge_profile(g: Graph, x: int) -> LayerEdgeProfile:
    if not g.is_connected():
        raise DisconnectedError("layer profile requires a connected graph")
    dist = g.bfs_distances(x)
    layers = g.layers(x)
    depth = len(layers)
    e_cross = [0] * max(depth - 1, 0)
    e_flat = [0] * depth
    for u, v in g.edges:
        du, dv = dist[u], dist[v]
        if du == dv:
            e_flat[du] += 1
        else:
            e_cross[min(du, dv)] += 1
    return LayerEdgeProfile(x, tuple(tuple(layer) for layer in layers), tuple(e_cross), tuple(e_flat))
