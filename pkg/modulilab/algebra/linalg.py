"""Exact determinants of matrices with polynomial or scalar entries."""
from modulilab.algebra.mpoly import MPoly
from modulilab.shared.errors import InternalInconsistencyError, NonSquareMatrixError


def _check_square(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquareMatrixError(f"Expected a square matrix, got {n} rows of lengths {[len(r) for r in m]}")
    return n


def _is_zero(x):
    return x.is_zero() if isinstance(x, MPoly) else not x


def _exact_div(num, den):
    if isinstance(den, MPoly) and not isinstance(num, MPoly):
        num = den.one() * num
    if isinstance(num, MPoly):
        q = num.divide_exact(den)
        if q is None:
            raise InternalInconsistencyError("Fraction-free elimination produced an inexact division")
        return q
    if isinstance(num, int) and isinstance(den, int):
        return num // den
    return num / den


def det_cofactor(m):
    n = _check_square(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    total = None
    for j in range(n):
        if _is_zero(m[0][j]):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return m[0][0] * 0
    return total


def det_bareiss(m):
    """Fraction-free Gaussian elimination; every division is exact."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not _is_zero(a[i][k])), None)
            if swap is None:
                return a[0][0] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * pivot - a[i][k] * a[k][j], previous)
        previous = pivot
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def det(m, method="auto"):
    """
    Determinant of a square matrix. Matrices up to 3x3 use cofactor expansion;
    larger ones use fraction-free elimination. Both give identical results.
    """
    n = _check_square(m)
    if method == "cofactor" or (method == "auto" and n <= 3):
        return det_cofactor(m)
    if method in ("bareiss", "auto"):
        return det_bareiss(m)
    raise ValueError(f"Unknown determinant method: {method}")


def mat_mul(a, b):
    """Product of two matrices given as nested sequences."""
    if len(a[0]) != len(b):
        raise NonSquareMatrixError(f"Cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def rank(m):
    """Rank over a field; entries are Fractions or elements of one F_p."""
    rows = [list(row) for row in m if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                factor = rows[i][col] * inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
