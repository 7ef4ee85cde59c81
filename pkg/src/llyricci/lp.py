"""Exact rational simplex for ``min c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``.

The slack basis is feasible because ``b >= 0``, so no phase one is needed.
Pivoting follows Bland's rule (smallest eligible index enters and leaves),
which cannot cycle and makes the returned vertex deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ArgumentError, InternalError

_ZERO = Fraction(0)


@dataclass
class LPResult:
    x: list[Fraction]
    value: Fraction
    dual: list[Fraction]  # pi <= 0 with A^T pi <= c and b.pi == value
    pivots: int


def solve_lp(c: Sequence, rows: Sequence[dict], b: Sequence, max_pivots: int = 100_000) -> LPResult:
    """Solve the LP; ``rows[i]`` maps variable index to coefficient (sparse).

    Raises :class:`InternalError` when the objective is unbounded below.
    """
    n = len(c)
    m = len(rows)
    if len(b) != m:
        raise ArgumentError("row count and right-hand side length differ")
    rhs = [Fraction(v) for v in b]
    if any(v < 0 for v in rhs):
        raise ArgumentError("right-hand side must be non-negative (origin must be feasible)")

    tab: list[dict[int, Fraction]] = []
    for i, row in enumerate(rows):
        t = {j: Fraction(a) for j, a in row.items() if a}
        t[n + i] = Fraction(1)
        tab.append(t)
    cost = {j: Fraction(v) for j, v in enumerate(c) if v}
    value = _ZERO
    basis = [n + i for i in range(m)]
    # columns -> rows holding a nonzero, kept in sync for cheap elimination
    col_rows: dict[int, set[int]] = {}
    for i, t in enumerate(tab):
        for j in t:
            col_rows.setdefault(j, set()).add(i)

    pivots = 0
    while True:
        entering = min((j for j, r in cost.items() if r < 0), default=None)
        if entering is None:
            break
        leave = None
        best = None
        for i in col_rows.get(entering, ()):
            a = tab[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise InternalError("LP is unbounded below")
        pivots += 1
        if pivots > max_pivots:
            raise InternalError("pivot limit exceeded")

        prow = tab[leave]
        inv = 1 / prow[entering]
        for j in prow:
            prow[j] *= inv
        rhs[leave] *= inv
        for i in list(col_rows[entering]):
            if i == leave:
                continue
            t = tab[i]
            f = t[entering]
            for j, a in prow.items():
                nv = t.get(j, _ZERO) - f * a
                if nv:
                    if j not in t:
                        col_rows.setdefault(j, set()).add(i)
                    t[j] = nv
                elif j in t:
                    del t[j]
                    col_rows[j].discard(i)
            rhs[i] -= f * rhs[leave]
        f = cost.get(entering)
        if f:
            for j, a in prow.items():
                nv = cost.get(j, _ZERO) - f * a
                if nv:
                    cost[j] = nv
                else:
                    cost.pop(j, None)
            value += f * rhs[leave]
        basis[leave] = entering

    x = [_ZERO] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rhs[i]
    dual = [-cost.get(n + i, _ZERO) for i in range(m)]
    return LPResult(x, value, dual, pivots)
