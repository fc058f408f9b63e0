"""Exact integer linear algebra: determinants, solving, lattice membership."""
from __future__ import annotations

from fractions import Fraction

from . import kernels


def determinant(matrix) -> int:
    """Determinant of a square integer matrix (Bareiss fraction-free elimination)."""
    m = [[int(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve(matrix, rhs) -> list[Fraction] | None:
    """Unique rational solution of ``matrix @ x = rhs``, or None if singular."""
    n = len(matrix)
    aug = [[int(v) for v in row] + [int(b)] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if aug[i][k] != 0), None)
            if swap is None:
                return None
            aug[k], aug[swap] = aug[swap], aug[k]
        pivot = aug[k][k]
        row_k = aug[k]
        for i in range(k + 1, n):
            row_i = aug[i]
            a = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (pivot * row_i[j] - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            if aug[i][j]:
                acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return x


class IntegerLattice:
    """Sublattice of ``Z^n`` spanned by integer rows, in echelon form."""

    def __init__(self, rows, dim: int):
        self.dim = dim
        rows = [list(r) for r in rows if any(r)]
        if rows:
            self.basis, self.pivots = kernels.echelon(rows)
        else:
            self.basis, self.pivots = [], []

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, vec) -> bool:
        v = [int(x) for x in vec]
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} in dimension {self.dim}")
        col = 0
        for row, p in zip(self.basis, self.pivots):
            # entries left of this pivot must already be cleared
            for j in range(col, p):
                if v[j]:
                    return False
            q, r = divmod(v[p], row[p])
            if r:
                return False
            if q:
                for j in range(p, self.dim):
                    if row[j]:
                        v[j] -= q * row[j]
            col = p + 1
        return not any(v[col:])
