"""Evidence scans for two open order-bound questions.

``c1``: a connected triangle-free graph with edge curvature at least
``kappa > 0`` has at most ``2**(2/kappa)`` vertices.
``c2``: a graph with positive curvature everywhere has at most
``sqrt(5)**Delta`` vertices, decided as ``|V|**2 <= 5**Delta`` in integers.

Records come out in input order regardless of ``jobs``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator

from .curvature import kappa_lly_bruteforce, min_edge_curvature
from .enumeration import canonical_code, enumerate_up_to
from .errors import ArgumentError, ParseError, ScaleError
from .generators import cartesian_power, cycle
from .graph import Graph, has_c3
from .graph6 import graph6_encode, read_graph6_stream
from .numerics import Verdict, compare_below_pow2, pow2_enclosure

C5_POWER_MAX = 3
_RATIO_BITS = 64


@dataclass
class ScanRecord:
    id: str
    status: str
    n: int | None = None
    m: int | None = None
    max_degree: int | None = None
    min_curvature: Fraction | None = None
    graph6: str | None = None
    c1_bound: tuple | None = None  # enclosure of 2**(2/kappa)
    c1_ratio: tuple | None = None  # enclosure of |V| / 2**(2/kappa)
    c2_ratio: Fraction | None = None  # |V|**2 / 5**Delta
    satisfies_c1: bool | None = None
    satisfies_c2: bool | None = None
    candidate_counterexample: bool = False
    error: str | None = None


@dataclass
class ScanSummary:
    conjecture: str
    scanned: int = 0
    totals: dict = field(default_factory=dict)
    candidates: int = 0
    max_c1_ratio: tuple | None = None  # (record id, upper end of the ratio enclosure)
    max_c2_ratio: tuple | None = None
    tight_c1: list = field(default_factory=list)
    tight_c2: list = field(default_factory=list)
    runtime_ms: int = 0


def iter_source(source: str) -> Iterator[tuple[str, Graph | ParseError]]:
    """``enum:<n>`` (all connected classes up to ``n`` vertices) or ``file:<path>`` (graph6)."""
    kind, _, arg = source.partition(":")
    if kind == "enum":
        try:
            n = int(arg)
        except ValueError:
            raise ArgumentError(f"bad enumeration size {arg!r}") from None
        for g in enumerate_up_to(n):
            yield f"enum:{g.n}:{canonical_code(g)[1]}", g
    elif kind == "file":
        with open(arg) as fh:
            for no, item in read_graph6_stream(fh):
                yield f"line:{no}", item
    else:
        raise ArgumentError(f"unknown source {source!r}; use enum:<n> or file:<path>")


def _c1_values(n: int, kappa: Fraction):
    exponent = 2 / kappa
    if exponent.denominator == 1:
        power = 1 << int(exponent)
        return (power, power), (Fraction(n, power), Fraction(n, power)), n <= power
    cmp = compare_below_pow2(n, exponent)
    if cmp.verdict is Verdict.INCONCLUSIVE:
        raise ArithmeticError(f"could not compare {n} with 2**{exponent}")
    lo, hi = pow2_enclosure(exponent, _RATIO_BITS)
    return (cmp.rhs_lower, cmp.rhs_upper), (n / hi, n / lo), cmp.verdict is Verdict.STRICTLY_LESS


def evaluate_graph(conjecture: str, gid: str, g, recheck: bool = True) -> ScanRecord:
    if isinstance(g, ParseError):
        return ScanRecord(gid, "parse-error", error=str(g))
    rec = ScanRecord(gid, "checked", g.n, g.m, g.max_degree(), graph6=graph6_encode(g))
    if not g.is_connected():
        rec.status = "skipped-disconnected"
        return rec
    if g.n < 2:
        rec.status = "skipped-trivial"
        return rec
    if conjecture == "c1" and has_c3(g):
        rec.status = "skipped-filter"
        return rec
    kappa, _ = min_edge_curvature(g, jobs=1)
    rec.min_curvature = kappa
    if kappa <= 0:
        rec.status = "out-of-hypothesis"
        return rec
    if conjecture == "c1":
        rec.c1_bound, rec.c1_ratio, rec.satisfies_c1 = _c1_values(g.n, kappa)
        violated = not rec.satisfies_c1
    else:
        rec.c2_ratio = Fraction(g.n**2, 5**g.max_degree())
        rec.satisfies_c2 = g.n**2 <= 5**g.max_degree()
        violated = not rec.satisfies_c2
    if violated and recheck:
        rec.candidate_counterexample = _reproduce(conjecture, g)
    return rec


def _reproduce(conjecture: str, g: Graph) -> bool:
    """Recompute the minimum curvature with the brute-force oracle and re-test."""
    kappa = min(kappa_lly_bruteforce(g, u, v)[0] for u, v in g.edges)
    if kappa <= 0:
        return False
    if conjecture == "c1":
        return not _c1_values(g.n, kappa)[2]
    return g.n**2 > 5**g.max_degree()


def _task(args):
    return evaluate_graph(*args)


class _Accumulator:
    def __init__(self, conjecture: str):
        self.summary = ScanSummary(conjecture)
        self.started = time.perf_counter()

    def add(self, r: ScanRecord):
        s = self.summary
        s.scanned += 1
        s.totals[r.status] = s.totals.get(r.status, 0) + 1
        s.candidates += r.candidate_counterexample
        if r.c1_ratio is not None:
            if s.max_c1_ratio is None or r.c1_ratio[1] > s.max_c1_ratio[1]:
                s.max_c1_ratio = (r.id, r.c1_ratio[1])
            if r.c1_ratio[0] == 1:
                s.tight_c1.append(r.id)
        if r.c2_ratio is not None:
            if s.max_c2_ratio is None or r.c2_ratio > s.max_c2_ratio[1]:
                s.max_c2_ratio = (r.id, r.c2_ratio)
            if r.c2_ratio == 1:
                s.tight_c2.append(r.id)

    def finish(self) -> ScanSummary:
        self.summary.runtime_ms = int((time.perf_counter() - self.started) * 1000)
        return self.summary


def scan(conjecture: str, items: Iterable, jobs: int = 1, sink=None,
         keep_records: bool = True) -> tuple[ScanSummary, list[ScanRecord]]:
    """Scan ``(id, graph)`` pairs.

    ``sink(record)`` is called in input order as records complete. With
    ``keep_records=False`` nothing but the summary is held in memory.
    """
    if conjecture not in ("c1", "c2"):
        raise ArgumentError(f"unknown conjecture {conjecture!r}")
    acc = _Accumulator(conjecture)
    tasks = ((conjecture, gid, g) for gid, g in items)
    records = []

    def emit(rec):
        acc.add(rec)
        if keep_records:
            records.append(rec)
        if sink:
            sink(rec)

    if jobs > 1:
        with Pool(jobs) as pool:
            for rec in pool.imap(_task, tasks, chunksize=4):
                emit(rec)
    else:
        for t in tasks:
            emit(_task(t))
    return acc.finish(), records


def scan_conjecture1(source: str, jobs: int = 1, sink=None, keep_records: bool = True):
    return scan("c1", iter_source(source), jobs, sink, keep_records)


def scan_conjecture2(source: str, jobs: int = 1, sink=None, keep_records: bool = True):
    return scan("c2", iter_source(source), jobs, sink, keep_records)


def c5_power_experiment(k: int, jobs: int = 1) -> dict:
    """Build the ``k``-th Cartesian power of C5 and test ``|V|**2 == 5**Delta``."""
    if k < 1:
        raise ArgumentError(f"k must be >= 1, got {k}")
    if k > C5_POWER_MAX:
        raise ScaleError(f"C5^{k} exceeds the exact-verification ceiling C5^{C5_POWER_MAX}")
    started = time.perf_counter()
    g = cartesian_power(cycle(5), k)
    kappa, edge = min_edge_curvature(g, jobs=jobs)
    delta = g.max_degree()
    return {
        "k": k,
        "n": g.n,
        "m": g.m,
        "max_degree": delta,
        "min_curvature": kappa,
        "argmin_edge": edge,
        "n_squared": g.n**2,
        "five_power": 5**delta,
        "tight": g.n**2 == 5**delta,
        "positive_curvature": kappa > 0,
        "runtime_ms": int((time.perf_counter() - started) * 1000),
    }
