"""Exact rational row reduction shared by the matrix-handling modules.

Everything here works over fractions.Fraction; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction


def row_echelon(rows):
    """Reduce a copy of `rows` to reduced row echelon form over the rationals.

    Returns (echelon_rows, pivot_columns); zero rows are dropped, so the rank
    is len(pivot_columns).
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rational_rank(rows) -> int:
    return len(row_echelon(rows)[1])


class SpanBasis:
    """Incrementally maintained row-echelon basis of a rational span."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def residual(self, vector):
        """Reduce `vector` against the basis; nonzero result means new direction."""
        v = [Fraction(x) for x in vector]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def contains(self, vector) -> bool:
        return not any(self.residual(vector))

    def add(self, vector) -> bool:
        """Insert `vector` into the span; returns True if it enlarged it."""
        v = self.residual(vector)
        for p, x in enumerate(v):
            if x != 0:
                inv = 1 / x
                v = [a * inv for a in v]
                for i, (row, q) in enumerate(zip(self.rows, self.pivots)):
                    if row[p] != 0:
                        f = row[p]
                        self.rows[i] = [a - f * b for a, b in zip(row, v)]
                self.rows.append(v)
                self.pivots.append(p)
                order = sorted(range(len(self.pivots)), key=self.pivots.__getitem__)
                self.rows = [self.rows[i] for i in order]
                self.pivots = [self.pivots[i] for i in order]
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)
