"""Exact Gaussian elimination over any field of this package."""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form.  Returns (matrix, pivot columns); input untouched."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv if not x.is_zero() else x for x in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows, field, ncols: int | None = None):
    """Basis of {v : rows * v = 0}, one vector per free column in increasing order.

    The basis vector for free column j has a 1 in position j and zeros in the
    other free positions, which gives the deterministic tie-breaking the
    algebra routines rely on.
    """
    if not rows:
        assert ncols is not None
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    m, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for j in free:
        v = [field.zero] * ncols
        v[j] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][j]
        basis.append(v)
    return basis


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def solve(matrix, rhs, field):
    """One solution x of matrix * x = rhs, or None if inconsistent."""
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    m, pivots = rref(aug, field)
    if n in pivots:
        return None
    x = [field.zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = m[i][n]
    return x
