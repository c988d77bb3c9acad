"""Field-generic exact linear algebra.

Matrices are lists of rows of field elements (ints for GF(p), Fractions
for Q).  GF(p) work is dispatched to the mod-p kernel; the rational path
runs the same deterministic Gauss-Jordan in Fractions, so rref output is
canonical for both fields.
"""

from fractions import Fraction

import numpy as np

from . import kernel


def _to_np(mat):
    return np.array([[int(x) for x in row] for row in mat], dtype=np.int64)


def _from_np(arr):
    return [[int(x) for x in row] for row in arr]


def rref(mat, field):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not mat or not mat[0]:
        return [], []
    if field.is_modp:
        r, pivots = kernel.rref(_to_np(mat), field.p)
        return _from_np(r), list(pivots)
    rows = [[Fraction(x) for x in row] for row in mat]
    m, n = len(rows), len(rows[0])
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        sel = None
        for i in range(r, m):
            if rows[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(mat, field):
    return len(rref(mat, field)[0])


def nullspace(mat, field):
    """Rows spanning {x : mat @ x = 0}; unit at each free column."""
    if not mat:
        return []
    n = len(mat[0])
    if field.is_modp:
        return _from_np(kernel.nullspace(_to_np(mat), field.p))
    r, pivots = rref(mat, field)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    out = []
    for fc in free:
        vec = [field.zero] * n
        vec[fc] = field.one
        for row, pc in enumerate(pivots):
            vec[pc] = -r[row][fc]
        out.append(vec)
    return out


def solve(mat, rhs, field):
    """One solution of mat @ x = rhs (columns of rhs), or None."""
    if field.is_modp:
        out = kernel.solve(_to_np(mat), _to_np(rhs), field.p)
        return None if out is None else _from_np(out)
    m = len(mat)
    n = len(mat[0]) if mat else 0
    aug = [list(mat[i]) + list(rhs[i]) for i in range(m)]
    r, pivots = rref(aug, field)
    for row, pc in enumerate(pivots):
        if pc >= n:
            return None
    k = len(rhs[0]) if rhs else 0
    sols = [[field.zero] * k for _ in range(n)]
    for row, pc in enumerate(pivots):
        sols[pc] = r[row][n:]
    return sols


def inv(mat, field):
    n = len(mat)
    if field.is_modp:
        return _from_np(kernel.inv(_to_np(mat), field.p))
    ident = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    aug = [list(mat[i]) + ident[i] for i in range(n)]
    r, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in r]


def matmul(a, b, field):
    if field.is_modp:
        return _from_np(kernel.matmul(_to_np(a), _to_np(b), field.p))
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[field.zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j] != 0:
                    oi[j] += x * bt[j]
    return out


def det_exact(mat):
    """Determinant of an integer/rational matrix, exactly (Bareiss)."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in mat]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            sel = None
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    sel = i
                    break
            if sel is None:
                return Fraction(0)
            a[k], a[sel] = a[sel], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def express_in_rref(rows, pivots, vec, field):
    """Coordinates of `vec` in the span of rref `rows`, or None.

    Cheap because each rref row is the unique one with a unit in its
    pivot column.
    """
    coords = []
    residue = list(vec)
    for row, pc in zip(rows, pivots):
        c = residue[pc]
        coords.append(c)
        if c != 0:
            residue = [field.sub(a, field.mul(c, b)) for a, b in zip(residue, row)]
    if any(x != 0 for x in residue):
        return None
    return coords
