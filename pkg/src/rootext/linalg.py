"""Exact linear algebra over the rationals.

Rows are sparse ``{column: value}`` maps.  Elimination is fraction-free:
every stored row is scaled to a primitive integer vector and combined by
integer cross-multiplication, pivoting on the first nonzero column.
Only the final reduced forms (kernel basis, solution coefficients) are
returned as ``Fraction`` values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Dict, List, Mapping, Optional, Sequence

SparseRow = Dict[int, int]


def _integerize(row: Mapping[int, Fraction]):
    """Return ``(int_row, scale)`` with ``int_row == scale * row``."""
    den = reduce(lcm, (Fraction(v).denominator for v in row.values()), 1)
    out = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    return out, Fraction(den)


def _primitive(row: SparseRow, combo: Dict[int, Fraction]):
    # divide by content, make the leading entry positive
    g = reduce(gcd, row.values(), 0)
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
        combo = {i: v / g for i, v in combo.items()}
    return row, combo


class Echelon:
    """Incremental row-echelon form with optional provenance tracking.

    ``pivots[c]`` is a primitive integer row whose first nonzero column is
    ``c``; with ``track=True`` each row also carries ``combo`` such that
    ``row == sum(combo[i] * original_row_i)``.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.pivots: Dict[int, SparseRow] = {}
        self.combos: Dict[int, Dict[int, Fraction]] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: SparseRow, combo: Dict[int, Fraction]):
        # stops at the first column without a pivot; a row with such a
        # column cannot be cancelled by the remaining pivots
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row, combo, c
            a, b = p[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = new
            if self.track:
                pc = self.combos[c]
                nc = {i: a * v for i, v in combo.items()}
                for i, v in pc.items():
                    s = nc.get(i, 0) - b * v
                    if s:
                        nc[i] = s
                    else:
                        nc.pop(i, None)
                combo = nc
        return row, combo, None

    def add_row(self, row: Mapping[int, Fraction]) -> Optional[int]:
        """Insert a row; returns its new pivot column, or None if dependent."""
        idx = self._count
        self._count += 1
        irow, scale = _integerize(row)
        combo = {idx: scale} if self.track else {}
        irow, combo, col = self._reduce(irow, combo)
        if col is None:
            return None
        irow, combo = _primitive(irow, combo)
        self.pivots[col] = irow
        if self.track:
            self.combos[col] = combo
        return col

    def solve(self, target: Mapping[int, Fraction]) -> Optional[Dict[int, Fraction]]:
        """Coefficients ``c`` with ``sum c[i] * row_i == target``, or None.

        Requires ``track=True``.
        """
        if not self.track:
            raise RuntimeError("solve() needs provenance tracking")
        irow, scale = _integerize(target)
        # key -1 stands for scale * target
        row, combo, col = self._reduce(irow, {-1: Fraction(1)})
        if col is not None:
            return None
        # now 0 == k * scale * target + sum_i combo[i] * row_i
        k = combo.pop(-1)
        return {i: -v / (k * scale) for i, v in combo.items() if v}

    def reduced_rows(self) -> Dict[int, Dict[int, Fraction]]:
        """Reduced row echelon form: pivot entry 1, zero above and below."""
        cols = sorted(self.pivots)
        rows = {c: {k: Fraction(v, self.pivots[c][c]) for k, v in self.pivots[c].items()}
                for c in cols}
        for c in reversed(cols):
            pr = rows[c]
            for c2 in cols:
                if c2 >= c:
                    break
                r = rows[c2]
                f = r.get(c)
                if f:
                    for k, v in pr.items():
                        s = r.get(k, 0) - f * v
                        if s:
                            r[k] = s
                        else:
                            r.pop(k, None)
        return rows

    def kernel(self, ncols: int) -> List[Dict[int, Fraction]]:
        """Basis of ``{v : row . v == 0 for every inserted row}``, one vector
        per free column, ordered by free column."""
        rows = self.reduced_rows()
        basis = []
        for j in range(ncols):
            if j in rows:
                continue
            v = {j: Fraction(1)}
            for c, r in rows.items():
                x = r.get(j)
                if x:
                    v[c] = -x
            basis.append(v)
        return basis


def rank(rows: Sequence[Mapping[int, Fraction]]) -> int:
    e = Echelon()
    for r in rows:
        e.add_row(r)
    return e.rank


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> List[Dict[int, Fraction]]:
    e = Echelon()
    for r in rows:
        e.add_row(r)
    return e.kernel(ncols)


def solve_combination(rows: Sequence[Mapping[int, Fraction]],
                      target: Mapping[int, Fraction]) -> Optional[Dict[int, Fraction]]:
    """First solution (under first-nonzero pivoting) of ``sum c_i row_i = target``."""
    e = Echelon(track=True)
    for r in rows:
        e.add_row(r)
    return e.solve(target)


# -- determinants over a commutative ring ---------------------------------------

def det_cofactor(matrix: Sequence[Sequence], zero, one):
    """Laplace expansion along the last row, memoizing minors of the top rows
    by their column sets."""
    m = len(matrix)
    if any(len(r) != m for r in matrix):
        raise ValueError("matrix is not square")
    memo = {}

    def minor(cols: tuple):
        # determinant of rows 0..len(cols)-1 restricted to cols
        if not cols:
            return one
        hit = memo.get(cols)
        if hit is not None:
            return hit
        r = len(cols) - 1
        total = zero
        for pos, c in enumerate(cols):
            entry = matrix[r][c]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if (r + pos) % 2 else total + term
        memo[cols] = total
        return total

    return minor(tuple(range(m)))


def det_bareiss(matrix: Sequence[Sequence], zero, one):
    """Fraction-free Bareiss elimination; entries need ``exact_div``."""
    a = [list(r) for r in matrix]
    m = len(a)
    sign = 1
    prev = one
    for k in range(m - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, m):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    d = a[m - 1][m - 1]
    return d if sign > 0 else -d
