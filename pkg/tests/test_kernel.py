"""The compiled kernel and the pure fallback must agree bit for bit."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfalg import _kernel_py, kernel, linalg
from surfalg.fields import GF, QQ

try:
    from surfalg import _kernel

    HAVE_C = True
except ImportError:
    HAVE_C = False


def random_matrix(rng, m, n, p):
    return rng.integers(0, p, size=(m, n), dtype=np.int64)


@pytest.mark.skipif(not HAVE_C, reason="compiled kernel unavailable")
@given(st.integers(0, 10**9), st.integers(1, 12), st.integers(1, 12),
       st.sampled_from([2, 5, 7, 101]))
@settings(max_examples=60, deadline=None)
def test_backends_agree(seed, m, n, p):
    rng = np.random.default_rng(seed)
    a = random_matrix(rng, m, n, p)
    r1, p1 = _kernel.rref(a, p)
    r2, p2 = _kernel_py.rref(a, p)
    assert p1 == p2
    assert np.array_equal(r1, r2)
    if m == n:
        b = random_matrix(rng, n, m, p)
        assert np.array_equal(_kernel.matmul(a, b, p), _kernel_py.matmul(a, b, p))


@given(st.integers(0, 10**9), st.integers(1, 10), st.integers(1, 10))
@settings(max_examples=40, deadline=None)
def test_rref_is_projection(seed, m, n):
    p = 101
    rng = np.random.default_rng(seed)
    a = random_matrix(rng, m, n, p)
    r, pivots = kernel.rref(a, p)
    # pivot columns of an rref are unit columns
    for row, c in enumerate(pivots):
        col = r[:, c]
        assert col[row] == 1 and np.count_nonzero(col) == 1
    # rref of the rref is itself
    r2, p2 = kernel.rref(r, p)
    assert p2 == pivots and np.array_equal(r2, r)


@given(st.integers(0, 10**9), st.integers(1, 9), st.integers(1, 9))
@settings(max_examples=40, deadline=None)
def test_nullspace_annihilates(seed, m, n):
    p = 7
    rng = np.random.default_rng(seed)
    a = random_matrix(rng, m, n, p)
    ns = kernel.nullspace(a, p)
    assert len(ns) + kernel.rank(a, p) == n
    for vec in ns:
        assert not ((a @ vec) % p).any()


def test_solve_and_inverse():
    p = 101
    rng = np.random.default_rng(7)
    a = random_matrix(rng, 6, 6, p)
    while kernel.rank(a, p) < 6:
        a = random_matrix(rng, 6, 6, p)
    inv = kernel.inv(a, p)
    assert np.array_equal(kernel.matmul(a, inv, p), np.eye(6, dtype=np.int64))
    b = random_matrix(rng, 6, 2, p)
    x = kernel.solve(a, b, p)
    assert np.array_equal(kernel.matmul(a, x, p), b % p)


def test_fraction_rref_matches_modp_rank():
    rng = np.random.default_rng(3)
    a = rng.integers(-4, 5, size=(7, 9))
    over_q = linalg.rank([[QQ.from_int(int(x)) for x in row] for row in a], QQ)
    # a rank drop mod p can only lower the rank
    over_p = linalg.rank([[int(x) % 101 for x in row] for row in a], GF(101))
    assert over_p <= over_q
    assert over_q == np.linalg.matrix_rank(a.astype(float))


def test_det_exact():
    assert linalg.det_exact([[4, 2], [2, 4]]) == 12
    assert linalg.det_exact([[1, 2], [2, 4]]) == 0
    mat = [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
    assert linalg.det_exact(mat) == 4


@pytest.mark.skipif(not HAVE_C, reason="compiled kernel unavailable")
def test_table_documents_identical_across_backends():
    import os
    import subprocess
    import sys

    script = (
        "from surfalg.algebra import build_algebra, canonical_json;"
        "from surfalg.catalog import builtin;"
        "from surfalg.fields import GF;"
        "t = build_algebra(builtin('sigma_r', GF(7), r=3));"
        "print(canonical_json(t.to_json_obj()))"
    )
    outs = []
    for pure in ("", "1"):
        env = dict(os.environ)
        if pure:
            env["SURFALG_PURE"] = pure
        else:
            env.pop("SURFALG_PURE", None)
        result = subprocess.run([sys.executable, "-c", script],
                                capture_output=True, text=True, env=env)
        assert result.returncode == 0, result.stderr
        outs.append(result.stdout)
    assert outs[0] == outs[1]
