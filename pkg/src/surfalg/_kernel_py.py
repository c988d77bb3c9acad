"""Pure-Python (numpy) mod-p linear algebra kernel.

Fallback for the compiled extension in `_kernel.pyx`; both expose the same
two primitives (`rref`, `matmul`) with identical pivoting, so results are
bit-for-bit interchangeable.  Entries are int64 in [0, p).
"""

import numpy as np

NAME = "py"


def rref(a, p):
    """Reduced row echelon form of `a` mod p (Gauss-Jordan, pivots = 1).

    Returns (r, pivots) where r contains only the nonzero rows.  Pivot
    selection is deterministic: leftmost column, topmost unprocessed row.
    """
    a = np.array(a, dtype=np.int64, order="C") % p
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = (a[r] * pow(piv, p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def matmul(a, b, p):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = a.shape[1]
    # int64 accumulation is exact as long as k*(p-1)^2 < 2^63
    if k and k * (p - 1) * (p - 1) >= (1 << 62):
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        step = max(1, (1 << 62) // max(1, (p - 1) * (p - 1)))
        for s in range(0, k, step):
            out = (out + a[:, s : s + step] @ b[s : s + step]) % p
        return out
    return (a @ b) % p
