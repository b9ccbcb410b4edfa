"""Two-phase dense simplex over the rationals with Bland's pivot rule.

Solves ``min c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``.
Everything is exact; Bland's rule (lowest eligible index for both the
entering and the leaving variable) rules out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    fun: Fraction | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows  # list of dict col -> Fraction (sparse)
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, col: int, obj: dict) -> None:
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            row = {k: v * inv for k, v in row.items()}
            self.rows[r] = row
            self.rhs[r] *= inv
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other.get(col)
            if f:
                for k, v in row.items():
                    nv = other.get(k, _ZERO) - f * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
                self.rhs[i] -= f * b
        f = obj.get(col)
        if f:
            for k, v in row.items():
                nv = obj.get(k, _ZERO) - f * v
                if nv:
                    obj[k] = nv
                else:
                    obj.pop(k, None)
            obj[-1] = obj.get(-1, _ZERO) - f * b
        self.basis[r] = col
        self.pivots += 1

    def run(self, obj: dict, allowed: int) -> str:
        """Minimise the objective whose reduced costs are ``obj``.

        ``obj[-1]`` holds minus the current objective value.  Only columns
        below ``allowed`` may enter.
        """
        while True:
            entering = None
            for k in sorted(obj):
                if 0 <= k < allowed and obj[k] < 0:
                    entering = k
                    break
            if entering is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], entering, obj)


def _reduced(costs: dict, tab: _Tableau) -> dict:
    obj = {k: Fraction(v) for k, v in costs.items() if v}
    obj[-1] = _ZERO
    for i, col in enumerate(tab.basis):
        f = obj.get(col)
        if f:
            for k, v in tab.rows[i].items():
                nv = obj.get(k, _ZERO) - f * v
                if nv:
                    obj[k] = nv
                else:
                    obj.pop(k, None)
            obj[-1] = obj.get(-1, _ZERO) - f * tab.rhs[i]
    return obj


def linprog_exact(
    c: Sequence,
    A_ub: Sequence[Sequence] | None = None,
    b_ub: Sequence | None = None,
    A_eq: Sequence[Sequence] | None = None,
    b_eq: Sequence | None = None,
) -> LPResult:
    n = len(c)
    A_ub = A_ub or []
    b_ub = b_ub or []
    A_eq = A_eq or []
    b_eq = b_eq or []
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side lengths differ")
    for row in list(A_ub) + list(A_eq):
        if len(row) != n:
            raise ValueError("constraint row length does not match objective")

    rows: list[dict] = []
    rhs: list[Fraction] = []
    basis: list[int | None] = []
    n_slack = len(A_ub)
    art_start = n + n_slack
    n_art = 0
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = {k: Fraction(v) for k, v in enumerate(a) if v}
        b = Fraction(b)
        row[n + i] = Fraction(1)
        if b < 0:
            row = {k: -v for k, v in row.items()}
            b = -b
            row[art_start + n_art] = Fraction(1)
            basis.append(art_start + n_art)
            n_art += 1
        else:
            basis.append(n + i)
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = {k: Fraction(v) for k, v in enumerate(a) if v}
        b = Fraction(b)
        if b < 0:
            row = {k: -v for k, v in row.items()}
            b = -b
        row[art_start + n_art] = Fraction(1)
        basis.append(art_start + n_art)
        n_art += 1
        rows.append(row)
        rhs.append(b)

    tab = _Tableau(rows, rhs, basis)
    if n_art:
        phase1 = {art_start + k: 1 for k in range(n_art)}
        obj = _reduced(phase1, tab)
        tab.run(obj, art_start + n_art)
        if obj.get(-1, _ZERO) != 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out; drop rows that are redundant
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= art_start:
                col = next((k for k in sorted(tab.rows[r]) if k < art_start), None)
                if col is None:
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, col, {})
            r += 1
        for row in tab.rows:
            for k in [k for k in row if k >= art_start]:
                del row[k]

    obj = _reduced({k: v for k, v in enumerate(c)}, tab)
    status = tab.run(obj, art_start)
    if status != OPTIMAL:
        return LPResult(status, pivots=tab.pivots)
    x = [_ZERO] * n
    for i, col in enumerate(tab.basis):
        if col < n:
            x[col] = tab.rhs[i]
    fun = sum((Fraction(cj) * xj for cj, xj in zip(c, x) if xj), _ZERO)
    return LPResult(OPTIMAL, x, fun, tab.pivots)
