"""Exact linear algebra over cyclotomic fields.

Elimination is fraction-free (Bareiss) over Z[zeta_n]; only the final
back-substitution passes through Q(zeta_n), after which denominators are
cleared again.
"""

from __future__ import annotations

import math
from functools import reduce

from .rings import CycElt

__all__ = ["bareiss_echelon", "rank", "nullspace"]


def bareiss_echelon(rows: list[list[CycElt]]):
    """Fraction-free row echelon form.

    Returns (echelon rows, pivot columns).  Every division is exact: after
    step r the entries are r x r minors of the input.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    prev = None
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row = m[i]
            for j in range(c + 1, ncols):
                v = piv * row[j] - a * m[r][j]
                row[j] = v if prev is None else v.divexact(prev)
            row[c] = piv - piv  # zero of the ring
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(bareiss_echelon(rows)[1])


class _Frac:
    """num / den with num in Z[zeta_n] and den a positive integer."""

    __slots__ = ("num", "den")

    def __init__(self, num: CycElt, den: int = 1):
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num.content(), den)
        if g > 1:
            num, den = num.divexact_int(g), den // g
        self.num, self.den = num, den

    def __add__(self, o):
        return _Frac(self.num * o.den + o.num * self.den, self.den * o.den)

    def __mul__(self, o):
        return _Frac(self.num * o.num, self.den * o.den)

    def __neg__(self):
        return _Frac(-self.num, self.den)

    def div_elt(self, x: CycElt) -> _Frac:
        num, den = self.num.field_quotient(x)
        return _Frac(num, den * self.den)


def nullspace(rows: list[list[CycElt]], ncols: int, zero: CycElt) -> list[list[CycElt]]:
    """Basis of {x : rows . x = 0} over Q(zeta_n), scaled to primitive integral vectors."""
    if rows:
        ech, pivots = bareiss_echelon(rows)
    else:
        ech, pivots = [], []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = zero + 1
    for f in free:
        x: list[_Frac | None] = [None] * ncols
        for c in free:
            x[c] = _Frac(one if c == f else zero)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            acc = _Frac(zero)
            for j in range(pc + 1, ncols):
                e = ech[r][j]
                if not e.is_zero():
                    acc = acc + _Frac(e) * x[j]
            x[pc] = (-acc).div_elt(ech[r][pc])
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (v.den for v in x), 1)
        vec = [v.num * (den // v.den) for v in x]
        g = reduce(math.gcd, (v.content() for v in vec), 0)
        if g > 1:
            vec = [v.divexact_int(g) for v in vec]
        basis.append(vec)
    return basis
