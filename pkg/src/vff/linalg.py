"""Dense matrices over Q(i)(gamma, alpha) indexed by partitions.

Determinants use Bareiss fraction-free elimination after clearing each row's
denominators, so every intermediate is a polynomial and every division is
exact.  Rank, null spaces and solves use Gauss-Jordan elimination with a
"smallest pivot first" rule to limit expression growth.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalars import ONE, ZERO, Scalar
from ._backend import kernel as _k

__all__ = ["ScalarMatrix", "rref", "nullspace", "solve", "det", "rank"]


def _size(x: Scalar) -> int:
    return sum(len(_k.terms(p)) + sum(_k.degrees(p)) for p in x.parts)


def rref(rows, ncols=None):
    """Reduced row echelon form of a list of rows (copied).

    Returns ``(rows, pivot_columns)``.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        candidates = [i for i in range(r, len(m)) if not m[i][c].is_zero()]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _size(m[i][c]))
        m[r], m[best] = m[best], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols=None) -> list[list[Scalar]]:
    """Basis of {x : rows @ x = 0}, one vector per free column (free entry = 1)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[ONE if j == i else ZERO for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def solve(a_rows, b_rows):
    """X with A X = B for square invertible A; ``None`` if A is singular."""
    n = len(a_rows)
    aug = [list(a) + list(b) for a, b in zip(a_rows, b_rows)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def det(rows) -> Scalar:
    """Determinant by Bareiss elimination on denominator-cleared rows."""
    n = len(rows)
    if n == 0:
        return ONE
    scale = ONE
    m = []
    for row in rows:
        d = ONE
        for x in row:
            den = Scalar(x.parts[2])
            if den != ONE:
                d = _lcm(d, den)
        m.append([x * d for x in row])
        scale = scale * d
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (p * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = ZERO
        prev = p
    result = m[n - 1][n - 1] / scale
    return -result if sign < 0 else result


def _lcm(a: Scalar, b: Scalar) -> Scalar:
    pa, pb = a.parts[0], b.parts[0]
    g = _k.gcd(pa, pb)
    return Scalar(_k.exquo(pa, g) * pb)


@dataclass
class ScalarMatrix:
    """Matrix with partition labels on rows and columns."""

    row_index: list
    col_index: list
    entries: list = field(repr=False)

    def __post_init__(self):
        if len(self.entries) != len(self.row_index):
            raise ValueError("row count does not match row index")
        for row in self.entries:
            if len(row) != len(self.col_index):
                raise ValueError("column count does not match column index")

    @property
    def shape(self):
        return len(self.row_index), len(self.col_index)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry(self, row_label, col_label) -> Scalar:
        return self.entries[self.row_index.index(row_label)][self.col_index.index(col_label)]

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (
            list(self.row_index) == list(other.row_index)
            and list(self.col_index) == list(other.col_index)
            and self.entries == other.entries
        )

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(
            list(self.col_index),
            list(self.row_index),
            [list(col) for col in zip(*self.entries)] if self.entries else [],
        )

    def __matmul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if len(self.col_index) != len(other.row_index):
            raise ValueError("shape mismatch")
        out = []
        for row in self.entries:
            new = []
            for j in range(len(other.col_index)):
                s = ZERO
                for a, brow in zip(row, other.entries):
                    b = brow[j]
                    if not a.is_zero() and not b.is_zero():
                        s = s + a * b
                new.append(s)
            out.append(new)
        return ScalarMatrix(list(self.row_index), list(other.col_index), out)

    def map(self, fn) -> "ScalarMatrix":
        return ScalarMatrix(
            list(self.row_index), list(self.col_index), [[fn(x) for x in row] for row in self.entries]
        )

    def subs(self, gamma=None, alpha=None) -> "ScalarMatrix":
        return self.map(lambda x: x.subs(gamma=gamma, alpha=alpha))

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def det(self) -> Scalar:
        if self.shape[0] != self.shape[1]:
            raise ValueError("determinant of a non-square matrix")
        return det(self.entries)

    def rank(self) -> int:
        return rank(self.entries)

    def nullspace(self):
        return nullspace(self.entries, len(self.col_index))

    def left_nullspace(self):
        return self.transpose().nullspace()
