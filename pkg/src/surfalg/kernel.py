"""Backend selection for the mod-p kernel, plus derived operations.

The compiled extension is preferred; `SURFALG_PURE=1` in the environment
forces the pure-Python kernel.  Everything built on top (nullspace, solve,
inverse) only uses the backend's `rref`/`matmul`, so the two backends are
interchangeable and produce identical matrices.
"""

import os

import numpy as np

if os.environ.get("SURFALG_PURE"):
    from . import _kernel_py as _backend
else:
    try:
        from . import _kernel as _backend
    except ImportError:
        from . import _kernel_py as _backend

BACKEND = _backend.NAME


def rref(a, p):
    return _backend.rref(a, p)


def matmul(a, b, p):
    return _backend.matmul(a, b, p)


def rank(a, p):
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return _backend.rref(a, p)[0].shape[0]


def nullspace(a, p):
    """Basis of {x : a @ x = 0 mod p}, rows of the returned matrix.

    Canonical: one vector per free column of the rref, unit at the free
    column, ordered by free column index.
    """
    a = np.asarray(a, dtype=np.int64)
    m, n = a.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = _backend.rref(a, p)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    out = np.zeros((len(free), n), dtype=np.int64)
    for idx, fc in enumerate(free):
        out[idx, fc] = 1
        for row, pc in enumerate(pivots):
            out[idx, pc] = (-int(r[row, fc])) % p
    return out


def solve(a, b, p):
    """One solution x of a @ x = b (free variables 0), or None."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64) % p
    m, n = a.shape
    if b.ndim == 1:
        b = b.reshape(m, 1)
    aug = np.concatenate([a % p, b], axis=1)
    r, pivots = _backend.rref(aug, p)
    for row in range(r.shape[0]):
        if pivots[row] >= n:
            return None
    sols = np.zeros((n, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(pivots):
        sols[pc] = r[row, n:]
    return sols


def inv(a, p):
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[0]
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    r, pivots = _backend.rref(aug, p)
    if pivots[: n if len(pivots) >= n else len(pivots)] != list(range(n)):
        raise ValueError("matrix not invertible mod p")
    return r[:, n:]
