"""Dense exact linear algebra over Q(s): determinant, rank, nullspace."""
from __future__ import annotations

from .scalars import ONE, ZERO, Scalar, scalar


def _copy(rows):
    return [[scalar(x) for x in row] for row in rows]


def det(matrix) -> Scalar:
    """Determinant by Gaussian elimination with exact pivoting."""
    m = _copy(matrix)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    result = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        inv = p.inverse()
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f = f * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return result


def rref(matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _copy(matrix)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix, ncols: int | None = None) -> list[list[Scalar]]:
    """Basis of {v : M v = 0}."""
    if not matrix:
        return [[ONE if i == j else ZERO for i in range(ncols or 0)] for j in range(ncols or 0)]
    m, pivots = rref(matrix)
    cols = len(m[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for row, p in zip(m, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
