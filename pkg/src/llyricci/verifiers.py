"""Instance checkers for the order bound on {C3, C5}-free graphs and the inequalities behind it.

Every checker returns a :class:`VerifierVerdict`. A failing verdict carries
a witness with both sides of the violated inequality so that it can be
re-checked without the code that produced it. Unless a caller passes one
explicitly, the curvature bound fed to a checker is the computed minimum
over edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, floor

from .curvature import kappa_lly, min_edge_curvature
from .errors import ArgumentError, InconclusiveError, NotHypercubeError, PreconditionError
from .graph import Graph, find_c3, find_c5
from .layers import layer_edge_profile, layer_partition
from .numerics import DEFAULT_MAX_BITS, Verdict, as_rational, compare_below_pow2, gen_binomial


@dataclass
class VerifierVerdict:
    statement: str
    holds: bool
    witness: dict | None = None
    context: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


@dataclass
class MatchingCertificate:
    edge: tuple
    left: tuple  # N(u) \ {v}
    right: tuple  # N(v) \ {u}
    matching: list | None = None  # [(a, b)] with a in left, b in right
    hall_violator: frozenset | None = None
    violator_side: str | None = None  # "left" or "right"
    violator_neighborhood: frozenset | None = None

    @property
    def is_perfect(self) -> bool:
        return self.matching is not None


@dataclass
class HypercubeLabeling:
    root: int
    dimension: int
    labels: dict  # vertex -> frozenset of 1..d


def _require_c3c5_free(g: Graph):
    tri = find_c3(g)
    if tri:
        raise PreconditionError(f"graph contains the triangle {tri}", {"cycle": list(tri)})
    pent = find_c5(g)
    if pent:
        raise PreconditionError(f"graph contains the 5-cycle {pent}", {"cycle": list(pent)})


def _require_connected(g: Graph):
    if not g.is_connected():
        raise PreconditionError("graph is not connected")


def _positive_kappa(g: Graph, kappa=None) -> Fraction:
    if kappa is None:
        kappa, _ = min_edge_curvature(g)
    kappa = as_rational(kappa)
    if kappa <= 0:
        raise PreconditionError(f"minimum edge curvature {kappa} is not positive", {"kappa": kappa})
    return kappa


# -- diameter and pair reduction --------------------------------------------


def check_diameter_bound(g: Graph, kappa0=None) -> VerifierVerdict:
    if kappa0 is None:
        _require_connected(g)
        kappa0 = _positive_kappa(g)
    kappa0 = as_rational(kappa0)
    if kappa0 <= 0:
        raise ArgumentError(f"kappa0 must be positive, got {kappa0}")
    _require_connected(g)
    diam = g.diameter()
    bound = 2 / kappa0
    ctx = {"kappa": kappa0, "diameter": diam, "bound": bound, "tight": diam == bound}
    if diam <= bound:
        return VerifierVerdict("diameter", True, None, ctx)
    for u in range(g.n):
        row = g.bfs_distances(u)
        for v in range(u + 1, g.n):
            if row[v] == diam:
                return VerifierVerdict("diameter", False, {"pair": (u, v), "lhs": diam, "rhs": bound}, ctx)
    raise AssertionError("unreachable")


def check_pair_reduction(g: Graph) -> VerifierVerdict:
    """Minimum edge curvature bounds the curvature of every non-adjacent pair from below."""
    _require_connected(g)
    kappa, edge = min_edge_curvature(g)
    ctx = {"kappa": kappa, "edge": edge, "pairs": 0}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            ctx["pairs"] += 1
            k = kappa_lly(g, u, v).kappa
            if k < kappa:
                return VerifierVerdict("adj-pair", False, {"pair": (u, v), "lhs": kappa, "rhs": k}, ctx)
    return VerifierVerdict("adj-pair", True, None, ctx)


# -- layer inequalities ------------------------------------------------------


def check_gamma_inequality(g: Graph, kappa=None, form: str = "c3c5") -> VerifierVerdict:
    """Check ``|plus| + w |zero| <= (1 - i kappa / 2) d_y`` for all pairs at distance ``i``.

    ``form="c3c5"`` uses ``w = 1`` and needs a {C3, C5}-free graph; it also
    checks the first-layer consequence ``kappa <= 2 / d_y``.
    ``form="lly"`` uses ``w = 1/2`` and holds on any positively curved graph.
    """
    if form not in ("c3c5", "lly"):
        raise ArgumentError(f"unknown form {form!r}")
    _require_connected(g)
    if form == "c3c5":
        _require_c3c5_free(g)
    kappa = _positive_kappa(g, kappa)
    weight = Fraction(1) if form == "c3c5" else Fraction(1, 2)
    statement = "gamma" if form == "c3c5" else "gamma-lly"
    pairs = tight = 0
    for x in range(g.n):
        for y in range(g.n):
            if x == y:
                continue
            part = layer_partition(g, x, y)
            i = part.distance
            dy = g.degree(y)
            lhs = len(part.plus) + weight * len(part.zero)
            rhs = (1 - i * kappa / 2) * dy
            pairs += 1
            ctx = {"kappa": kappa, "i": i, "form": form}
            if lhs > rhs:
                witness = {"pair": (x, y), "i": i, "lhs": Fraction(lhs), "rhs": rhs,
                           "plus": sorted(part.plus), "zero": sorted(part.zero)}
                return VerifierVerdict(statement, False, witness, ctx)
            if form == "c3c5" and i == 1 and kappa > Fraction(2, dy):
                witness = {"pair": (x, y), "i": 1, "lhs": kappa, "rhs": Fraction(2, dy)}
                return VerifierVerdict(statement, False, witness, ctx)
            tight += lhs == rhs
    ctx = {"kappa": kappa, "form": form, "pairs": pairs, "tight_pairs": tight, "all_tight": tight == pairs}
    return VerifierVerdict(statement, True, None, ctx)


# -- neighborhood matchings --------------------------------------------------


def _max_matching(left, right, adjacent):
    match_right: dict = {}
    match_left: dict = {}

    def augment(a, seen):
        for b in right:
            if adjacent(a, b) and b not in seen:
                seen.add(b)
                if b not in match_right or augment(match_right[b], seen):
                    match_right[b] = a
                    match_left[a] = b
                    return True
        return False

    for a in left:
        augment(a, set())
    return match_left, match_right


def _hall_violator(left, right, adjacent, match_left, match_right):
    """Alternating-path closure from the unmatched left vertices."""
    reach_left = {a for a in left if a not in match_left}
    reach_right: set = set()
    frontier = list(reach_left)
    while frontier:
        a = frontier.pop()
        for b in right:
            if adjacent(a, b) and b not in reach_right:
                reach_right.add(b)
                a2 = match_right[b]
                if a2 not in reach_left:
                    reach_left.add(a2)
                    frontier.append(a2)
    return frozenset(reach_left), frozenset(reach_right)


def neighborhood_matching(g: Graph, u: int, v: int) -> MatchingCertificate:
    if not g.has_edge(u, v):
        raise ArgumentError(f"({u}, {v}) is not an edge")
    common = set(g.adj[u]) & set(g.adj[v])
    if common:
        raise PreconditionError(f"edge ({u}, {v}) lies on a triangle through {min(common)}")
    left = tuple(w for w in g.adj[u] if w != v)
    right = tuple(w for w in g.adj[v] if w != u)
    match_left, match_right = _max_matching(left, right, g.has_edge)
    cert = MatchingCertificate((u, v), left, right)
    if len(match_left) == len(left) == len(right):
        cert.matching = sorted(match_left.items())
        return cert
    if len(match_left) < len(left):
        s, ns = _hall_violator(left, right, g.has_edge, match_left, match_right)
        cert.violator_side = "left"
    else:
        flip = lambda a, b: g.has_edge(b, a)  # noqa: E731
        s, ns = _hall_violator(right, left, flip, match_right, match_left)
        cert.violator_side = "right"
    cert.hall_violator, cert.violator_neighborhood = s, ns
    return cert


def check_matching_lemma(g: Graph) -> VerifierVerdict:
    """Every positively curved edge of a regular {C3, C5}-free graph has a perfect neighborhood matching."""
    if not g.is_regular():
        raise PreconditionError("graph is not regular")
    _require_c3c5_free(g)
    edges = []
    for u, v in g.edges:
        k = kappa_lly(g, u, v).kappa
        cert = neighborhood_matching(g, u, v)
        kind = "matching" if cert.is_perfect else "hall-violator"
        edges.append({"edge": (u, v), "kappa": k, "certificate": kind, "in_hypothesis": k > 0})
        if k > 0 and not cert.is_perfect:
            witness = {"edge": (u, v), "kappa": k, "violator": sorted(cert.hall_violator),
                       "neighborhood": sorted(cert.violator_neighborhood), "side": cert.violator_side}
            return VerifierVerdict("matching", False, witness, {"edges": edges})
    return VerifierVerdict("matching", True, None, {"edges": edges})


def check_regular_constant(g: Graph) -> VerifierVerdict:
    _require_connected(g)
    if not g.is_regular():
        raise PreconditionError("graph is not regular")
    _require_c3c5_free(g)
    d = g.degree(0)
    values = {}
    for u, v in g.edges:
        k = kappa_lly(g, u, v).kappa
        if k <= 0:
            raise PreconditionError(f"edge ({u}, {v}) has non-positive curvature {k}", {"edge": (u, v), "kappa": k})
        values[(u, v)] = k
    target = Fraction(2, d)
    for edge, k in values.items():
        if k != target:
            return VerifierVerdict("regular", False, {"edge": edge, "lhs": k, "rhs": target}, {"degree": d})
    return VerifierVerdict("regular", True, None, {"degree": d, "kappa": target})


# -- order bounds ------------------------------------------------------------


def lly_order_bound(max_degree: int, kappa) -> Fraction:
    """``1 + sum_{j=1}^{floor(2/kappa)} Delta^j prod_{i<j} (1 - i kappa / 2)``."""
    kappa = as_rational(kappa)
    if kappa <= 0:
        raise ArgumentError(f"kappa must be positive, got {kappa}")
    if max_degree < 1:
        raise ArgumentError(f"maximum degree must be >= 1, got {max_degree}")
    total = Fraction(1)
    prod = Fraction(1)
    for j in range(1, floor(2 / kappa) + 1):
        if j > 1:
            prod *= 1 - (j - 1) * kappa / 2
        total += max_degree**j * prod
    return total


def check_lly_order_bound(g: Graph) -> VerifierVerdict:
    _require_connected(g)
    kappa = _positive_kappa(g)
    bound = lly_order_bound(g.max_degree(), kappa)
    ctx = {"kappa": kappa, "max_degree": g.max_degree(), "bound": bound}
    if g.n <= bound:
        return VerifierVerdict("lly-bound", True, None, ctx)
    return VerifierVerdict("lly-bound", False, {"lhs": g.n, "rhs": bound}, ctx)


def _counting_chain(g: Graph, kappa: Fraction) -> tuple[bool, dict]:
    """Layer-edge counts around a minimum-degree root against ``C(2/kappa - 1, i) delta``."""
    delta = g.min_degree()
    root = g.degrees().index(delta)
    prof = layer_edge_profile(g, root)
    s = 2 / kappa - 1
    top = floor(2 / kappa)
    rows = []
    ok = True
    total_rhs = Fraction(0)
    for i in range(top + 1):
        cross = prof.e_cross[i] if i < len(prof.e_cross) else 0
        flat = prof.e_flat[i] if i < len(prof.e_flat) else 0
        rhs = gen_binomial(s, i) * delta
        total_rhs += rhs
        rows.append({"i": i, "lhs": cross + 2 * flat, "rhs": rhs})
        if cross + 2 * flat > rhs:
            ok = False
    depth = len(prof.layers) - 1
    if depth > top:
        ok = False
    if g.m > total_rhs:
        ok = False
    return ok, {"root": root, "min_degree": delta, "rows": rows, "edges": g.m, "edge_bound": total_rhs}


def check_main_bound(g: Graph, max_bits: int = DEFAULT_MAX_BITS) -> VerifierVerdict:
    """``|V| <= 2**(2/kappa)`` with the equality case reconstructed as a hypercube."""
    _require_connected(g)
    _require_c3c5_free(g)
    kappa = _positive_kappa(g)
    exponent = 2 / kappa
    n = g.n
    ctx: dict = {"kappa": kappa, "exponent": exponent, "n": n}
    if exponent.denominator == 1:
        power = 1 << int(exponent)
        ctx["rhs"] = power
        holds, equality = n <= power, n == power
    else:
        cmp = compare_below_pow2(n, exponent, max_bits=max_bits)
        ctx["rhs_enclosure"] = (cmp.rhs_lower, cmp.rhs_upper)
        if cmp.verdict is Verdict.INCONCLUSIVE:
            raise InconclusiveError(f"could not separate {n} from 2**({exponent}) with {max_bits} bits")
        holds, equality = cmp.verdict is Verdict.STRICTLY_LESS, False
    ctx["equality"] = equality

    chain_ok, chain = _counting_chain(g, kappa)
    ctx["counting_chain"] = chain
    if not holds:
        return VerifierVerdict("bound", False, {"lhs": n, "rhs": ctx.get("rhs", ctx.get("rhs_enclosure")),
                                                "kappa": kappa}, ctx)
    if not chain_ok:
        return VerifierVerdict("bound", False, {"counting_chain": chain, "kappa": kappa}, ctx)

    if equality:
        d = int(exponent)
        try:
            lab = hypercube_labeling(g)
        except NotHypercubeError as exc:
            return VerifierVerdict("bound", False, {"equality_without_hypercube": str(exc), "vertex": exc.vertex}, ctx)
        ctx["labeling"] = {v: sorted(s) for v, s in lab.labels.items()}
        ctx["dimension"] = d
        if lab.dimension != d or kappa != Fraction(2, d):
            return VerifierVerdict("bound", False, {"kappa": kappa, "expected": Fraction(2, d)}, ctx)
        layers = _layer_count_verdict(g, d)
        ctx["layer_counts"] = layers.holds
        flat_zero = all(not any(layer_edge_profile(g, x).e_flat) for x in range(g.n))
        ctx["bipartite"] = g.is_bipartite()
        if not layers.holds or ctx["bipartite"] != flat_zero or not flat_zero:
            return VerifierVerdict("bound", False, layers.witness or {"bipartite": ctx["bipartite"]}, ctx)
    return VerifierVerdict("bound", True, None, ctx)


# -- equality case -------------------------------------------------------------


def hypercube_labeling(g: Graph, root: int = 0) -> HypercubeLabeling:
    """Label vertices by subsets of ``{1..d}`` layer by layer from ``root``."""
    n = g.n
    if n < 2 or n & (n - 1):
        raise NotHypercubeError(f"{n} vertices is not a power of two >= 2")
    d = n.bit_length() - 1
    bad = next((v for v in range(n) if g.degree(v) != d), None)
    if bad is not None:
        raise NotHypercubeError(f"vertex {bad} has degree {g.degree(bad)}, expected {d}", bad)
    if not g.is_connected():
        raise NotHypercubeError("graph is not connected")
    if not g.is_bipartite():
        raise NotHypercubeError("graph is not bipartite")

    dist = g.bfs_distances(root)
    layers = g.layers(root)
    labels: dict = {root: frozenset()}
    for j, w in enumerate(g.adj[root], start=1):
        labels[w] = frozenset({j})
    used = set(labels.values())
    for i in range(2, len(layers)):
        for v in layers[i]:
            down = [w for w in g.adj[v] if dist[w] == i - 1]
            if len(down) != i:
                raise NotHypercubeError(f"vertex {v} at layer {i} has {len(down)} lower neighbors", v)
            label = frozenset().union(*(labels[w] for w in down))
            if len(label) != i:
                raise NotHypercubeError(f"lower labels of vertex {v} span {len(label)} elements, expected {i}", v)
            if label in used:
                raise NotHypercubeError(f"label {sorted(label)} of vertex {v} is already taken", v)
            labels[v] = label
            used.add(label)
    if len(labels) != n:
        missing = next(v for v in range(n) if v not in labels)
        raise NotHypercubeError(f"vertex {missing} received no label", missing)
    for u, v in g.edges:
        if len(labels[u] ^ labels[v]) != 1:
            raise NotHypercubeError(f"edge ({u}, {v}) joins labels differing in more than one element", u)
    if g.m != d * (1 << (d - 1)):
        raise NotHypercubeError(f"edge count {g.m} differs from {d * (1 << (d - 1))}")
    return HypercubeLabeling(root, d, dict(sorted(labels.items())))


def _layer_count_verdict(g: Graph, d: int) -> VerifierVerdict:
    for x in range(g.n):
        prof = layer_edge_profile(g, x)
        sizes = prof.layer_sizes()
        expected = [comb(d, i) for i in range(d + 1)]
        if sizes != expected:
            return VerifierVerdict("layers", False, {"root": x, "lhs": sizes, "rhs": expected})
        if any(prof.e_flat):
            return VerifierVerdict("layers", False, {"root": x, "e_flat": list(prof.e_flat)})
        for y in range(g.n):
            if y == x:
                continue
            part = layer_partition(g, x, y)
            i = part.distance
            if len(part.plus) != d - i or len(part.minus) != i:
                return VerifierVerdict("layers", False, {"pair": (x, y), "i": i, "plus": len(part.plus),
                                                         "minus": len(part.minus), "expected": (d - i, i)})
    return VerifierVerdict("layers", True, None, {"dimension": d})


def check_layer_counts(g: Graph) -> VerifierVerdict:
    _require_connected(g)
    _require_c3c5_free(g)
    kappa = _positive_kappa(g)
    exponent = 2 / kappa
    if exponent.denominator != 1 or g.n != 1 << int(exponent):
        raise PreconditionError(f"|V| = {g.n} does not attain 2**(2/kappa) with kappa = {kappa}")
    return _layer_count_verdict(g, int(exponent))
