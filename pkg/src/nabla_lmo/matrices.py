"""Small exact matrices over the rationals, stored as tuples of tuples.

Sizes stay in the single digits everywhere in this package, so plain
Gauss-Jordan over `fractions.Fraction` is both exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def _frac(value) -> Fraction:
    if isinstance(value, (float, complex)):
        raise TypeError("floating point entries are not accepted")
    return Fraction(value)


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    """Coerce nested ints/strings/Fractions to an immutable rational matrix."""
    out = tuple(tuple(_frac(v) for v in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zero_matrix(n: int, m: int) -> Matrix:
    zero = Fraction(0)
    return tuple(tuple(zero for _ in range(m)) for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(a: Matrix, c: Fraction) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(a[i][j] for j in cols) for i in rows)


def is_square(a: Matrix) -> bool:
    return all(len(row) == len(a) for row in a)


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def is_skew_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(i, n))


def is_integral(a: Matrix) -> bool:
    return all(x.denominator == 1 for row in a for x in row)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; ValueError when singular."""
    n = len(a)
    work = [list(row) + [Fraction(i == j) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv_p = 1 / work[col][col]
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def det(a: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination with row pivoting."""
    n = len(a)
    work = [list(row) for row in a]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        result *= work[col][col]
        inv_p = 1 / work[col][col]
        for r in range(col + 1, n):
            if work[r][col] != 0:
                f = work[r][col] * inv_p
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return result


def rank(a: Matrix) -> int:
    rows = [list(row) for row in a]
    rk = 0
    ncols = len(a[0]) if a else 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv_p = 1 / rows[row][col]
        for r in range(row + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] * inv_p
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[row])]
        row += 1
        rk += 1
        if row == len(rows):
            break
    return rk
