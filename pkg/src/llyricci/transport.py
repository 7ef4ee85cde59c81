"""Lazy random walks and exact transportation distance on graphs.

The transportation problem is solved as a min-cost flow by successive
shortest paths with node potentials. Masses are scaled to integers by
their common denominator so every augmentation moves an integral amount.
The optimal potentials give a dual 1-Lipschitz function; it is extended
to every vertex by the distance envelope ``min_t (f(t) + d(w, t))`` over
the sinks, which keeps it optimal and makes it Lipschitz on all of ``V``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from .errors import ArgumentError, DegreeZeroError, DisconnectedError, MarginalMismatch
from .graph import Graph
from .numerics import as_rational

_ZERO = Fraction(0)


class Distribution(dict):
    """Vertex -> Fraction mass; zero entries are dropped."""

    def __init__(self, masses: Mapping | Iterable = ()):
        super().__init__()
        items = masses.items() if isinstance(masses, Mapping) else masses
        for v, w in items:
            w = as_rational(w)
            if w < 0:
                raise ArgumentError(f"negative mass {w} at vertex {v}")
            if w:
                self[v] = self.get(v, _ZERO) + w

    @property
    def total(self) -> Fraction:
        return sum(self.values(), _ZERO)

    def check_probability(self):
        if self.total != 1:
            raise ArgumentError(f"masses sum to {self.total}, not 1")


@dataclass
class Coupling:
    entries: dict  # (u, v) -> Fraction

    def row_sums(self) -> dict:
        out: dict = {}
        for (u, _), w in self.entries.items():
            out[u] = out.get(u, _ZERO) + w
        return out

    def col_sums(self) -> dict:
        out: dict = {}
        for (_, v), w in self.entries.items():
            out[v] = out.get(v, _ZERO) + w
        return out

    def cost(self, g: Graph) -> Fraction:
        return sum((w * g.distance(u, v) for (u, v), w in self.entries.items()), _ZERO)


@dataclass
class LipschitzWitness:
    values: dict  # vertex -> Fraction

    def pairing(self, m1: Mapping, m2: Mapping) -> Fraction:
        """``sum_v f(v) (m1(v) - m2(v))``."""
        keys = set(m1) | set(m2)
        return sum((self.values[v] * (m1.get(v, _ZERO) - m2.get(v, _ZERO)) for v in keys), _ZERO)


@dataclass
class TransportResult:
    cost: Fraction
    plan: Coupling
    dual: LipschitzWitness
    augmentations: int = field(default=0)


@dataclass
class CheckResult:
    ok: bool
    violation: tuple | None = None

    def __bool__(self):
        return self.ok


def lazy_walk(g: Graph, x: int, alpha) -> Distribution:
    alpha = as_rational(alpha)
    if not (0 <= alpha < 1):
        raise ArgumentError(f"idleness alpha must lie in [0, 1), got {alpha}")
    d = g.degree(x)
    if d == 0:
        raise DegreeZeroError(f"vertex {x} is isolated")
    step = (1 - alpha) / d
    masses = {v: step for v in g.adj[x]}
    masses[x] = alpha
    return Distribution(masses)


def _min_cost_flow(sources: list, sinks: list, supply: list[int], demand: list[int], cost):
    """Transport integer supplies to integer demands on the complete bipartite network.

    Returns ``(flow dict, source potentials, sink potentials, augmentations)``
    where potentials ``p`` satisfy ``p_t - p_s <= cost(s, t)`` with equality
    on every arc carrying flow.
    """
    k, l = len(sources), len(sinks)
    # nodes: 0 = super source, 1..k sources, k+1..k+l sinks, k+l+1 super sink
    S, T = 0, k + l + 1
    N = k + l + 2
    INF = sum(supply) + 1
    graph: list[list[list]] = [[] for _ in range(N)]  # arc = [to, cap, cost, rev]

    def add(u, v, cap, c):
        graph[u].append([v, cap, c, len(graph[v])])
        graph[v].append([u, 0, -c, len(graph[u]) - 1])

    for a in range(k):
        add(S, 1 + a, supply[a], 0)
    for a in range(k):
        for b in range(l):
            add(1 + a, 1 + k + b, INF, cost[a][b])
    for b in range(l):
        add(1 + k + b, T, demand[b], 0)

    pot = [0] * N
    remaining = sum(supply)
    rounds = 0
    while remaining:
        dist = [None] * N
        prev = [None] * N
        dist[S] = 0
        heap = [(0, S)]
        while heap:
            du, u = heapq.heappop(heap)
            if du != dist[u]:
                continue
            for idx, (v, cap, c, _) in enumerate(graph[u]):
                if cap <= 0:
                    continue
                nd = du + c + pot[u] - pot[v]
                if dist[v] is None or nd < dist[v]:
                    dist[v] = nd
                    prev[v] = (u, idx)
                    heapq.heappush(heap, (nd, v))
        if dist[T] is None:
            raise DisconnectedError("no augmenting path; supplies and demands cannot be matched")
        cap_t = dist[T]
        for v in range(N):
            pot[v] += cap_t if dist[v] is None or dist[v] > cap_t else dist[v]
        push = remaining
        v = T
        while v != S:
            u, idx = prev[v]
            push = min(push, graph[u][idx][1])
            v = u
        v = T
        while v != S:
            u, idx = prev[v]
            arc = graph[u][idx]
            arc[1] -= push
            graph[v][arc[3]][1] += push
            v = u
        remaining -= push
        rounds += 1

    # Exact potentials for the final residual network (Bellman-Ford from a
    # virtual root); reduced costs are then non-negative on every residual arc.
    p = [0] * N
    for _ in range(N):
        changed = False
        for u in range(N):
            for v, cap, c, _ in graph[u]:
                if cap > 0 and p[u] + c < p[v]:
                    p[v] = p[u] + c
                    changed = True
        if not changed:
            break
    else:
        raise ArithmeticError("negative residual cycle after min-cost flow")

    flow = {}
    for a in range(k):
        for v, cap, c, _ in graph[1 + a]:
            if 1 + k <= v <= k + l:
                sent = INF - cap
                if sent:
                    flow[(a, v - 1 - k)] = sent
    return flow, [p[1 + a] for a in range(k)], [p[1 + k + b] for b in range(l)], rounds


def transport_distance(g: Graph, m1: Mapping, m2: Mapping) -> TransportResult:
    """Exact ``W(m1, m2)`` with an optimal plan and a matching dual witness."""
    m1, m2 = Distribution(m1), Distribution(m2)
    for v in list(m1) + list(m2):
        if not 0 <= v < g.n:
            raise ArgumentError(f"vertex {v} is not in the graph")
    if m1.total != m2.total:
        raise MarginalMismatch(f"total masses differ: {m1.total} vs {m2.total}")

    plan: dict = {}
    surplus: dict = {}
    deficit: dict = {}
    for v in sorted(set(m1) | set(m2)):
        a, b = m1.get(v, _ZERO), m2.get(v, _ZERO)
        common = min(a, b)
        if common:
            plan[(v, v)] = common
        if a > b:
            surplus[v] = a - b
        elif b > a:
            deficit[v] = b - a

    sources, sinks = sorted(surplus), sorted(deficit)
    rows = [g.bfs_distances(s) for s in sources]
    cost_matrix = []
    for row in rows:
        line = [row[t] for t in sinks]
        if None in line:
            raise DisconnectedError("distributions are supported on different components")
        cost_matrix.append(line)

    scale = lcm(*(w.denominator for w in list(surplus.values()) + list(deficit.values()))) if sources else 1
    flows, src_pot, snk_pot, rounds = _min_cost_flow(
        sources, sinks,
        [int(surplus[s] * scale) for s in sources],
        [int(deficit[t] * scale) for t in sinks],
        cost_matrix,
    )
    cost = _ZERO
    for (a, b), amount in flows.items():
        w = Fraction(amount, scale)
        plan[(sources[a], sinks[b])] = plan.get((sources[a], sinks[b]), _ZERO) + w
        cost += w * cost_matrix[a][b]

    # f = -potential on sinks, then the envelope over sinks for every vertex.
    if sinks:
        sink_f = {t: Fraction(-snk_pot[b]) for b, t in enumerate(sinks)}
        sink_rows = {t: g.bfs_distances(t) for t in sinks}
        values = {}
        for w in range(g.n):
            cands = [sink_f[t] + sink_rows[t][w] for t in sinks if sink_rows[t][w] is not None]
            if cands:
                values[w] = min(cands)
    else:
        values = {w: _ZERO for w in range(g.n)}
    return TransportResult(cost, Coupling(plan), LipschitzWitness(values), rounds)


def verify_coupling(g: Graph, plan: Coupling, m1: Mapping, m2: Mapping) -> CheckResult:
    for (u, v), w in sorted(plan.entries.items()):
        if w < 0:
            return CheckResult(False, ("negative entry", (u, v), w))
        if not (0 <= u < g.n and 0 <= v < g.n):
            return CheckResult(False, ("vertex outside graph", (u, v), w))
    rows, cols = plan.row_sums(), plan.col_sums()
    for v in sorted(set(rows) | set(m1)):
        if rows.get(v, _ZERO) != m1.get(v, _ZERO):
            return CheckResult(False, ("row marginal", v, rows.get(v, _ZERO), m1.get(v, _ZERO)))
    for v in sorted(set(cols) | set(m2)):
        if cols.get(v, _ZERO) != m2.get(v, _ZERO):
            return CheckResult(False, ("column marginal", v, cols.get(v, _ZERO), m2.get(v, _ZERO)))
    return CheckResult(True)


def verify_lipschitz(g: Graph, f: LipschitzWitness | Mapping, support=None) -> CheckResult:
    values = f.values if isinstance(f, LipschitzWitness) else f
    verts = sorted(values if support is None else support)
    for i, u in enumerate(verts):
        row = g.bfs_distances(u)
        for v in verts[i + 1:]:
            if row[v] is None:
                continue
            if abs(values[u] - values[v]) > row[v]:
                return CheckResult(False, (u, v, values[u], values[v], row[v]))
    return CheckResult(True)
