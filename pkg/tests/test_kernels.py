import os
import subprocess
import sys

import numpy as np
import pytest

from hadamat import _kernels


def test_permutation_array_lexicographic():
    p = _kernels.permutation_array(3)
    assert p.tolist() == [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    if expected == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba unavailable")
    env = dict(os.environ, HADAMAT_NO_JIT=flag)
    out = subprocess.run([sys.executable, "-c", "from hadamat import _kernels; print(_kernels.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected


@pytest.mark.parametrize("seed", range(4))
def test_equiv_scan_backends_agree(seed):
    rng = np.random.default_rng(seed)
    n, M = 4, 12
    E1 = rng.integers(0, M, size=(n, n))
    perms = _kernels.permutation_array(n)
    a, b = perms[rng.integers(len(perms))], perms[rng.integers(len(perms))]
    E2 = (E1[np.ix_(a, b)] + rng.integers(0, M, size=(n, 1)) + rng.integers(0, M, size=(1, n))) % M
    T = (E2 - E2[:, :1] - E2[:1, :] + E2[0, 0]) % M
    for exhaustive in (False, True):
        r1 = _kernels.equiv_scan(E1, T, perms, M, exhaustive, use_numba=True)
        r2 = _kernels.equiv_scan(E1, T, perms, M, exhaustive, use_numba=False)
        assert r1 == r2
        assert r1[0] >= 0


def test_equiv_scan_no_match():
    perms = _kernels.permutation_array(2)
    E1 = np.zeros((2, 2), dtype=np.int64)
    T = np.array([[0, 0], [0, 1]])
    for jit in (True, False):
        assert _kernels.equiv_scan(E1, T, perms, 2, True, use_numba=jit) == (-1, 0, 4)


def test_search_capacity_retry():
    # a result buffer smaller than the solution count forces the resize path
    rows = _kernels.circulant_search_numba(2, 4, False, True, capacity=2)
    assert sorted(rows.tolist()) == [[0, 1], [0, 3], [1, 0], [1, 2], [2, 1], [2, 3], [3, 0], [3, 2]]


def test_numpy_chunking_matches():
    a = _kernels.circulant_search_numpy(5, 5, True, True, chunk=8)
    b = _kernels.circulant_search_numpy(5, 5, True, True)
    assert sorted(a.tolist()) == sorted(b.tolist())
