"""Small dense matrices over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .scalars import compact


class ExactMatrix:
    """Square (or rectangular) matrix of ints/Fractions, row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(compact(Fraction(x)) if not isinstance(x, int) else x for x in r) for r in rows)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> ExactMatrix:
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values) -> ExactMatrix:
        v = list(values)
        return cls([[v[i] if i == j else 0 for j in range(len(v))] for i in range(len(v))])

    @classmethod
    def blocks(cls, grid) -> ExactMatrix:
        """Assemble from a 2-D grid of equally-sized square blocks."""
        out = []
        for brow in grid:
            for r in range(brow[0].n):
                out.append([x for b in brow for x in b.rows[r]])
        return cls(out)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.rows])

    def __add__(self, o):
        return ExactMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __sub__(self, o):
        return ExactMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    def __mul__(self, s):
        return ExactMatrix([[x * s for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, o):
        cols = list(zip(*o.rows))
        return ExactMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix(list(zip(*self.rows)))

    def apply(self, v):
        return [sum(a * b for a, b in zip(r, v)) for r in self.rows]

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.n))

    def block(self, bi: int, bj: int, size: int) -> ExactMatrix:
        return ExactMatrix([r[bj * size:(bj + 1) * size] for r in self.rows[bi * size:(bi + 1) * size]])

    def is_symmetric(self) -> bool:
        return self == self.T

    def is_skew(self) -> bool:
        return self == -self.T

    def is_orthogonal(self) -> bool:
        return self.T @ self == ExactMatrix.identity(self.n)

    def det(self):
        return det(self.rows)

    def rank(self) -> int:
        return rank(self.rows)


def det(rows):
    """Determinant by fraction-free Bareiss elimination after clearing denominators."""
    n = len(rows)
    if n == 0:
        return 1
    scale = 1
    m = []
    for r in rows:
        d = lcm(*(Fraction(x).denominator for x in r))
        scale *= d
        m.append([int(x * d) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for p in range(k + 1, n):
                if m[p][k] != 0:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (pivot * mi[j] - f * mk[j]) // prev
        prev = pivot
    return compact(Fraction(sign * m[n - 1][n - 1], scale))


def rank(rows) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r
