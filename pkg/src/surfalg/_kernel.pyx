# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p linear algebra kernel (hot loops of the engine).

Same contract as `_kernel_py`: rref with deterministic pivoting and an
exact mod-p matmul, entries int64 in [0, p).
"""

import numpy as np

cimport numpy as cnp

NAME = "c"


cdef long _inv_mod(long a, long p):
    # Fermat: a^(p-2) mod p, by square and multiply.
    cdef long result = 1
    cdef long base = a % p
    cdef long e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref(a, long p):
    """Reduced row echelon form mod p; returns (nonzero rows, pivot cols)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = \
        np.ascontiguousarray(np.array(a, dtype=np.int64) % p)
    cdef long[:, ::1] m = arr
    cdef Py_ssize_t nrows = arr.shape[0]
    cdef Py_ssize_t ncols = arr.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long piv, inv, factor, tmp
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = -1
        for k in range(r, nrows):
            if m[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(ncols):
                tmp = m[r, j]
                m[r, j] = m[i, j]
                m[i, j] = tmp
        piv = m[r, c]
        if piv != 1:
            inv = _inv_mod(piv, p)
            for j in range(ncols):
                m[r, j] = (m[r, j] * inv) % p
        for k in range(nrows):
            if k == r:
                continue
            factor = m[k, c]
            if factor != 0:
                for j in range(ncols):
                    m[k, j] = (m[k, j] - factor * m[r, j]) % p
                    if m[k, j] < 0:
                        m[k, j] += p
        pivots.append(c)
        r += 1
    return arr[:r], pivots


def matmul(a, b, long p):
    cdef cnp.ndarray[cnp.int64_t, ndim=2] aa = \
        np.ascontiguousarray(np.asarray(a, dtype=np.int64))
    cdef cnp.ndarray[cnp.int64_t, ndim=2] bb = \
        np.ascontiguousarray(np.asarray(b, dtype=np.int64))
    cdef Py_ssize_t n = aa.shape[0], k = aa.shape[1], mcols = bb.shape[1]
    cdef cnp.ndarray[cnp.int64_t, ndim=2] out = \
        np.zeros((n, mcols), dtype=np.int64)
    cdef long[:, ::1] av = aa
    cdef long[:, ::1] bv = bb
    cdef long[:, ::1] ov = out
    cdef Py_ssize_t i, j, t
    cdef long acc, lim, aij
    lim = (<long>1 << 62) // (p if p > 1 else 2)
    for i in range(n):
        for j in range(mcols):
            acc = 0
            for t in range(k):
                aij = av[i, t] * bv[t, j]
                acc += aij
                if acc >= lim:
                    acc %= p
            ov[i, j] = acc % p
    return out
