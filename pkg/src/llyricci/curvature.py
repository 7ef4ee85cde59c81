"""Lin-Lu-Yau curvature: the Laplacian LP, the lazy-walk route, and a brute-force oracle.

For ``x != y`` the curvature is the minimum of
``(Laplacian f(x) - Laplacian f(y)) / d(x, y)`` over 1-Lipschitz ``f`` with
``f(y) - f(x) = d(x, y)``. Only the values of ``f`` on
``N[x] | N[y]`` enter the objective, and any Lipschitz function there
extends to the whole graph, so the LP lives on that set. Fixing
``f(x) = 0`` removes translations; shifting each variable by the lower
envelope ``max(-d(x, v), d(x, y) - d(y, v))`` makes the origin feasible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Mapping, Sequence

from .errors import ArgumentError, DisconnectedError, InternalError
from .graph import Graph
from .lp import solve_lp
from .numerics import as_rational
from .transport import lazy_walk, transport_distance

_ZERO = Fraction(0)


@dataclass
class CurvatureReport:
    x: int
    y: int
    distance: int
    kappa: Fraction
    witness: dict  # vertex -> int, the minimizing f on N[x] | N[y]
    method: str = "laplacian-lp"
    kappa_alpha: tuple | None = None  # (alpha, value)
    notes: list = field(default_factory=list)


@dataclass
class IdlenessProfile:
    x: int
    y: int
    distance: int
    samples: list  # [(alpha, kappa_alpha)] sorted by alpha

    def concavity_violations(self) -> list:
        """Sample triples breaking concavity, with ``(1, 0)`` appended as the right end."""
        pts = sorted(self.samples)
        if not pts or pts[-1][0] != 1:
            pts.append((Fraction(1), _ZERO))
        bad = []
        for (a, ka), (b, kb), (c, kc) in zip(pts, pts[1:], pts[2:]):
            if kb * (c - a) < ka * (c - b) + kc * (b - a):
                bad.append(((a, ka), (b, kb), (c, kc)))
        return bad

    def upper_bound_violations(self) -> list:
        return [(a, k) for a, k in self.samples if k > (1 - a) * Fraction(2, self.distance)]

    def normalized(self) -> list:
        """``kappa_alpha / (1 - alpha)`` at each sample."""
        return [(a, k / (1 - a)) for a, k in sorted(self.samples)]


def laplacian(g: Graph, f: Mapping, x: int) -> Fraction:
    d = g.degree(x)
    if d == 0:
        raise ArgumentError(f"vertex {x} is isolated")
    try:
        fx = f[x]
        return Fraction(sum(f[w] - fx for w in g.adj[x])) / d
    except KeyError as exc:
        raise ArgumentError(f"function has no value at vertex {exc.args[0]}") from None


def gradient_of_laplacian(g: Graph, f: Mapping, x: int, y: int) -> Fraction:
    return (laplacian(g, f, x) - laplacian(g, f, y)) / g.distance(x, y)


def _check_pair(g: Graph, x: int, y: int) -> int:
    if x == y:
        raise ArgumentError("curvature needs two distinct vertices")
    dist = g.bfs_distances(x)[y]
    if dist is None:
        raise DisconnectedError(f"{x} and {y} lie in different components")
    if g.degree(x) == 0 or g.degree(y) == 0:
        raise ArgumentError("curvature is undefined at isolated vertices")
    return dist


def _envelopes(g: Graph, x: int, y: int):
    D = g.distance(x, y)
    dx, dy = g.bfs_distances(x), g.bfs_distances(y)
    support = sorted(set(g.closed_neighborhood(x)) | set(g.closed_neighborhood(y)))
    lower = {v: max(-dx[v], D - dy[v]) for v in support}
    upper = {v: min(dx[v], D + dy[v]) for v in support}
    return D, support, lower, upper


def kappa_lly(g: Graph, x: int, y: int) -> CurvatureReport:
    """Exact LLY curvature of the pair via the Laplacian LP."""
    _check_pair(g, x, y)
    D, support, lower, upper = _envelopes(g, x, y)
    free = [v for v in support if v not in (x, y)]
    index = {v: i for i, v in enumerate(free)}

    c = [Fraction(0)] * len(free)
    dxg, dyg = g.degree(x), g.degree(y)
    for w in g.adj[x]:
        if w in index:
            c[index[w]] += Fraction(1, dxg * D)
    for w in g.adj[y]:
        if w in index:
            c[index[w]] -= Fraction(1, dyg * D)
    constant = gradient_of_laplacian(g, lower, x, y)

    rows, rhs = [], []
    for v in free:
        bound = upper[v] - lower[v]
        rows.append({index[v]: 1})
        rhs.append(bound)
    for u in free:
        du = g.bfs_distances(u)
        for v in free:
            if u != v:
                rows.append({index[u]: 1, index[v]: -1})
                rhs.append(du[v] - lower[u] + lower[v])

    result = solve_lp(c, rows, rhs)
    f = {x: 0, y: D}
    for v in free:
        val = lower[v] + result.x[index[v]]
        if val.denominator != 1:
            raise InternalError(f"non-integral optimal vertex at {v}: {val}")
        f[v] = int(val)
    kappa = constant + result.value
    if gradient_of_laplacian(g, f, x, y) != kappa:
        raise InternalError("witness does not attain the LP value")
    report = CurvatureReport(x, y, D, kappa, dict(sorted(f.items())))
    if g.n >= 2 and g.m == g.n * (g.n - 1) // 2:
        report.notes.append(
            f"complete graph K_{g.n}: computed {kappa}; the value 1 + 1/n = "
            f"{1 + Fraction(1, g.n)} quoted for complete graphs does not match"
        )
    return report


def kappa_lly_bruteforce(g: Graph, x: int, y: int) -> tuple[Fraction, dict]:
    """Minimum over integer 1-Lipschitz ``f`` on ``N[x] | N[y]`` by exhaustive search.

    Independent of the LP; exponential in the support size.
    """
    _check_pair(g, x, y)
    D, support, lower, upper = _envelopes(g, x, y)
    free = [v for v in support if v not in (x, y)]
    rows = {v: g.bfs_distances(v) for v in support}
    f = {x: 0, y: D}
    best = [None, None]

    def rec(k):
        if k == len(free):
            val = gradient_of_laplacian(g, f, x, y)
            if best[0] is None or val < best[0]:
                best[0], best[1] = val, dict(f)
            return
        v = free[k]
        for value in range(lower[v], upper[v] + 1):
            if all(abs(value - f[u]) <= rows[v][u] for u in f):
                f[v] = value
                rec(k + 1)
                del f[v]

    rec(0)
    return best[0], dict(sorted(best[1].items()))


def kappa_alpha(g: Graph, x: int, y: int, alpha) -> Fraction:
    D = _check_pair(g, x, y)
    alpha = as_rational(alpha)
    result = transport_distance(g, lazy_walk(g, x, alpha), lazy_walk(g, y, alpha))
    return 1 - result.cost / D


def idleness_profile(g: Graph, x: int, y: int, alphas: Sequence) -> IdlenessProfile:
    D = _check_pair(g, x, y)
    samples = sorted((as_rational(a), kappa_alpha(g, x, y, a)) for a in alphas)
    return IdlenessProfile(x, y, D, samples)


def _edge_report(args):
    g, u, v = args
    return kappa_lly(g, u, v)


def curvature_all_edges(g: Graph, jobs: int | None = None) -> list[CurvatureReport]:
    """Reports for every edge in ``g.edges`` order."""
    if not g.is_connected():
        raise DisconnectedError("curvature sweep requires a connected graph")
    jobs = jobs or int(os.environ.get("RICCI_JOBS", "1"))
    tasks = [(g, u, v) for u, v in g.edges]
    if jobs > 1 and len(tasks) > 1:
        with Pool(jobs) as pool:
            return pool.map(_edge_report, tasks)
    return [_edge_report(t) for t in tasks]


def min_edge_curvature(g: Graph, jobs: int | None = None) -> tuple[Fraction, tuple[int, int]]:
    if g.n < 2:
        raise ArgumentError("need at least one edge")
    reports = curvature_all_edges(g, jobs)
    best = min(reports, key=lambda r: r.kappa)
    return best.kappa, (best.x, best.y)


def curvature_all_pairs(g: Graph) -> dict:
    if not g.is_connected():
        raise DisconnectedError("pair sweep requires a connected graph")
    return {(u, v): kappa_lly(g, u, v).kappa for u in range(g.n) for v in range(u + 1, g.n)}
