"""Independent reference computations for the test suite.

Everything here is deliberately written by a different route than the
package code: cofactor expansion instead of fraction-free elimination,
explicit row elimination instead of the Schur formula, direct series
manipulation on plain coefficient lists instead of HSeries methods.
"""

from fractions import Fraction
from math import factorial


def det_cofactor(rows):
    """Determinant by first-row cofactor expansion. Entries may live in any
    commutative ring with +, -, * and an `is_zero`-like falsy scalar 0;
    `one` is the multiplicative identity for the empty matrix."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def eliminate_block(entries, k):
    """Remove the first k rows/columns of a symmetric matrix by plain
    Gaussian row elimination, pivoting anywhere inside the leading k x k
    block, and return the surviving bottom-right block."""
    a = [[Fraction(x) for x in row] for row in entries]
    n = len(a)
    done_rows: set = set()
    done_cols: set = set()
    for _ in range(k):
        pivot = None
        for i in range(k):
            if i in done_rows:
                continue
            for j in range(k):
                if j not in done_cols and a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            raise ZeroDivisionError("leading block is singular")
        p, q = pivot
        for i in range(n):
            if i == p or i in done_rows:
                continue
            factor = a[i][q] / a[p][q]
            if factor:
                a[i] = [a[i][c] - factor * a[p][c] for c in range(n)]
        done_rows.add(p)
        done_cols.add(q)
    return tuple(tuple(a[i][j] for j in range(k, n)) for i in range(k, n))


def sinh_ratio_coeffs(order):
    """Coefficients of 2*sinh(h/2)/h = sum_k h^(2k) / (4^k (2k+1)!)."""
    out = [Fraction(0)] * (order + 1)
    k = 0
    while 2 * k <= order:
        out[2 * k] = Fraction(1, 4**k * factorial(2 * k + 1))
        k += 1
    return out


def invert_coeffs(a):
    """Multiplicative inverse of a coefficient list by forward substitution:
    b_0 = 1/a_0, then sum_{j<=m} a_j b_(m-j) = 0."""
    if a[0] == 0:
        raise ZeroDivisionError("no inverse: zero constant term")
    b = [Fraction(1) / a[0]]
    for m in range(1, len(a)):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += a[j] * b[m - j]
        b.append(-acc / a[0])
    return b


def mul_coeffs(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def log_coeffs(a, order):
    """log of a coefficient list with a_0 = 1, via the alternating power sum
    log(1+u) = u - u^2/2 + u^3/3 - ..."""
    assert a[0] == 1
    u = [Fraction(0)] + [Fraction(x) for x in a[1 : order + 1]]
    u += [Fraction(0)] * (order + 1 - len(u))
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        power = mul_coeffs(power, u, order)
        sign = Fraction(-1) ** (k + 1)
        for m in range(order + 1):
            out[m] += sign * power[m] / k
    return out


def cosh_minus_coeffs(order):
    """2*cosh(h) - 2 = sum_{m even >= 2} 2 h^m / m!."""
    out = [Fraction(0)] * (order + 1)
    for m in range(2, order + 1, 2):
        out[m] = Fraction(2, factorial(m))
    return out


def sequence_poly_degree(ys):
    """Degree of the lowest-degree polynomial through (0, y_0), (1, y_1), ...
    via the finite-difference table; -1 when all values are zero."""
    row = [Fraction(y) for y in ys]
    degree = -1
    level = 0
    while row:
        if any(v != 0 for v in row):
            degree = level
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        level += 1
    return degree


def random_unimodular(rng, n, steps=12):
    """Random integer matrix of determinant +-1: shear, swap, and negate
    moves applied to the identity."""
    p = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    if n < 2:
        return tuple(tuple(row) for row in p)
    for _ in range(steps):
        move = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if move == 0:
            c = rng.choice((-2, -1, 1, 2))
            p[i] = [p[i][c2] + c * p[j][c2] for c2 in range(n)]
        elif move == 1:
            p[i], p[j] = p[j], p[i]
        else:
            p[i] = [-x for x in p[i]]
    return tuple(tuple(row) for row in p)


def random_symmetric(rng, n, denominators=(1,)):
    """Random symmetric matrix with entries num/den, num in [-3, 3]."""
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-3, 3), rng.choice(denominators))
            a[i][j] = a[j][i] = v
    return tuple(tuple(row) for row in a)
