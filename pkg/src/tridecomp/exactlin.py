"""Exact rational LDL^T factorisation and positive-semidefiniteness checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence


class NotSymmetricError(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix must be square")
    return m


def check_symmetric(m: Sequence[Sequence[Fraction]]) -> None:
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")


def quadratic_form(m: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Fraction:
    n = len(m)
    if len(x) != n:
        raise ValueError("dimension mismatch")
    return sum((x[i] * m[i][j] * x[j] for i in range(n) for j in range(n) if x[i] and x[j]),
               Fraction(0))


def mat_vec(m: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> list[Fraction]:
    if len(x) != len(m):
        raise ValueError("dimension mismatch")
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in m]


@dataclass
class LDLTResult:
    """``P^T M P = L D L^T`` where ``P[:, k] = e_{perm[k]}``.

    ``complete`` is False when elimination met a zero pivot with a nonzero
    off-diagonal remainder; the matrix is then indefinite and only the first
    ``len(pivots)`` columns of ``L`` are meaningful.
    """

    perm: list[int]
    L: list[list[Fraction]]
    D: list[Fraction]
    rank: int
    complete: bool = True
    witness: list[Fraction] | None = field(default=None, repr=False)

    @property
    def psd(self) -> bool:
        return self.witness is None


def ldlt(rows: Sequence[Sequence]) -> LDLTResult:
    """Symmetric elimination pivoting on the largest remaining diagonal entry.

    Alongside the Schur complement we carry, for every remaining index, the
    vector ``u_r`` in original coordinates with ``S_rs = u_r^T M u_s``.  A
    negative diagonal ``S_rr`` therefore yields the witness ``u_r``.
    """
    m = as_matrix(rows)
    check_symmetric(m)
    n = len(m)
    s = [row[:] for row in m]
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    pivots: list[int] = []
    D: list[Fraction] = []
    cols: dict[int, dict[int, Fraction]] = {}
    witness = None
    complete = True

    while remaining:
        if witness is None:
            neg = [r for r in remaining if s[r][r] < 0]
            if neg:
                witness = u[neg[0]][:]
        p = max(remaining, key=lambda r: (s[r][r], -r))
        if s[p][p] == 0:
            # only non-positive diagonals left; a negative one can still pivot
            p = next((r for r in remaining if s[r][r] != 0), p)
        d = s[p][p]
        if d == 0:
            off = [(r, q) for r in remaining for q in remaining if r < q and s[r][q] != 0]
            if off:
                complete = False
                if witness is None:
                    r, q = off[0]
                    sign = 1 if s[r][q] > 0 else -1
                    witness = [a - sign * b for a, b in zip(u[r], u[q])]
            break
        remaining.remove(p)
        pivots.append(p)
        D.append(d)
        col = {}
        for r in remaining:
            f = s[r][p] / d
            col[r] = f
            if f:
                for q in remaining:
                    s[r][q] -= f * s[p][q]
                u[r] = [a - f * b for a, b in zip(u[r], u[p])]
        cols[p] = col

    rank = len(pivots)
    perm = pivots + remaining
    pos = {v: k for k, v in enumerate(perm)}
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k, p in enumerate(pivots):
        for r, f in cols[p].items():
            L[pos[r]][k] = f
    D = D + [Fraction(0)] * (n - rank)
    return LDLTResult(perm=perm, L=L, D=D, rank=rank, complete=complete, witness=witness)


def reconstruct(res: LDLTResult) -> list[list[Fraction]]:
    """``L D L^T`` in the permuted basis."""
    n = len(res.D)
    L, D = res.L, res.D
    return [[sum((L[i][k] * D[k] * L[j][k] for k in range(n)), Fraction(0))
             for j in range(n)] for i in range(n)]


def is_psd(rows: Sequence[Sequence]) -> tuple[bool, list[Fraction] | None]:
    """Return ``(True, None)`` or ``(False, x)`` with ``x^T M x < 0``."""
    res = ldlt(rows)
    return res.psd, res.witness


def rank(rows: Sequence[Sequence]) -> int:
    return ldlt(rows).rank


def kernel_check(rows: Sequence[Sequence], v: Sequence) -> bool:
    m = as_matrix(rows)
    if len(v) != len(m):
        raise ValueError(f"vector of length {len(v)} against {len(m)}x{len(m)} matrix")
    return all(x == 0 for x in mat_vec(m, [Fraction(a) for a in v]))
