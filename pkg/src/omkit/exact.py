"""Exact rational matrices: rank, row bases and determinant signs.

Everything runs on `fractions.Fraction` and Python integers; there is no
floating point and therefore no tolerance anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, PreconditionError


@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        if rows and len({len(row) for row in rows}) != 1:
            raise PreconditionError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Column of element ``j`` (1-based)."""
        return tuple(row[j - 1] for row in self.rows)

    def select_columns(self, cols) -> "RationalMatrix":
        """Matrix whose columns are the listed 1-based columns, repeats allowed."""
        return RationalMatrix(tuple(tuple(row[j - 1] for j in cols) for row in self.rows))

    @classmethod
    def parse(cls, text: str) -> "RationalMatrix":
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                rows.append(tuple(Fraction(tok) for tok in line.split()))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"matrix line {lineno}: bad rational in {line!r}") from None
        if not rows:
            raise ParseError("empty matrix")
        if len({len(r) for r in rows}) != 1:
            raise ParseError("matrix rows have different lengths")
        return cls(tuple(rows))

    def dumps(self) -> str:
        return "".join(" ".join(str(x) for x in row) + "\n" for row in self.rows)


def _integer_rows(rows) -> list[list[int]]:
    # scaling a row by a positive integer keeps every minor's sign
    out = []
    for row in rows:
        scale = math.lcm(*(Fraction(x).denominator for x in row)) if row else 1
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def det_sign(square) -> int:
    """Sign of the determinant of a square rational matrix (Bareiss elimination)."""
    a = _integer_rows(square)
    m = len(a)
    if m == 0:
        return 1
    if any(len(row) != m for row in a):
        raise PreconditionError("det_sign needs a square matrix")
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for p in range(k + 1, m):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    d = a[m - 1][m - 1]
    return sign * ((d > 0) - (d < 0))


def row_echelon(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column indices (0-based)."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    if not a:
        return a, pivots
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(m: RationalMatrix) -> int:
    return len(row_echelon(m.rows)[1])


def row_basis(m: RationalMatrix) -> RationalMatrix:
    """Full-row-rank matrix with the same row space (hence the same oriented matroid)."""
    reduced, pivots = row_echelon(m.rows)
    return RationalMatrix(tuple(tuple(row) for row in reduced[: len(pivots)]))


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {x : M x = 0}."""
    reduced, pivots = row_echelon(m.rows)
    n = m.n
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis
