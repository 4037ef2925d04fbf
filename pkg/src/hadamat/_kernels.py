"""Integer inner loops for the equivalence scan and the circulant search.

Each kernel has a numba implementation and a vectorized numpy one with the
same contract. The numba path is used when numba imports and the environment
variable ``HADAMAT_NO_JIT`` is unset or ``0``; both paths are exact (all
decisions are made on integers, floats only ever pre-filter).
"""
from __future__ import annotations

import itertools
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("HADAMAT_NO_JIT", "0") in ("", "0")

FLOAT_TOL = 1e-8
PRUNE_SLACK = 1e-9


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _njit(fn):
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


# -- equivalence scan ---------------------------------------------------------
#
# For exponent grids E1 (H1 = zeta_M^E1) and T = dephased exponents of H2, find
# the permutation pairs (a, b), in lexicographic order, for which the dephased
# form of E1[perms[a]][:, perms[b]] equals T.


def _equiv_scan_py(E1, T, perms, M, exhaustive):
    P, n = perms.shape
    first = -1
    count = 0
    examined = 0
    for a in range(P):
        for b in range(P):
            examined += 1
            ok = True
            x00 = E1[perms[a, 0], perms[b, 0]]
            for i in range(n):
                xi0 = E1[perms[a, i], perms[b, 0]]
                for j in range(n):
                    v = E1[perms[a, i], perms[b, j]] - xi0 - E1[perms[a, 0], perms[b, j]] + x00
                    v %= M
                    if v != T[i, j]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
                if first < 0:
                    first = a * P + b
                    if not exhaustive:
                        return first, count, examined
    return first, count, examined


equiv_scan_numba = _njit(_equiv_scan_py)


def equiv_scan_numpy(E1, T, perms, M, exhaustive):
    P, n = perms.shape
    X = E1[perms[:, None, :, None], perms[None, :, None, :]]  # (P, P, n, n)
    D = (X - X[:, :, :, :1] - X[:, :, :1, :] + X[:, :, :1, :1]) % M
    hits = np.all(D == T, axis=(2, 3)).ravel()
    idx = np.flatnonzero(hits)
    if idx.size == 0:
        return -1, 0, P * P
    first = int(idx[0])
    if exhaustive:
        return first, int(idx.size), P * P
    return first, 1, first + 1


def equiv_scan(E1, T, perms, M, exhaustive=False, use_numba=None):
    E1 = np.ascontiguousarray(E1, dtype=np.int64)
    T = np.ascontiguousarray(T, dtype=np.int64)
    perms = np.ascontiguousarray(perms, dtype=np.int64)
    jit = USE_NUMBA if use_numba is None else use_numba
    fn = equiv_scan_numba if jit else equiv_scan_numpy
    first, count, examined = fn(E1, T, perms, int(M), bool(exhaustive))
    return int(first), int(count), int(examined)


def permutation_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


# -- circulant search ---------------------------------------------------------
#
# First rows r in Z_N^n (entries zeta_N^r_j). Row s of the circulant is the
# first row rolled right by s, so the Gram condition is, for every s = 1..n-1,
#   sum_j zeta_N^(r_j - r_(j-s)) = 0.
# Exactness: the exponent histogram c satisfies sum_k c_k zeta^k = 0 iff
# c @ R == 0, with R[k] the reduced coordinates of zeta_N^k.
# Pruning: with a prefix of length L placed, the row-0/row-1 terms j = 1..L-1
# are known and n - L + 1 unit terms remain, so |partial| must not exceed that.


def _leaf_ok_py(r, n, N, cs, sn, R, hist, acc):
    for s in range(1, n):
        re_ = 0.0
        im_ = 0.0
        for j in range(n):
            d = (r[j] - r[(j - s) % n]) % N
            re_ += cs[d]
            im_ += sn[d]
        if re_ * re_ + im_ * im_ > FLOAT_TOL * FLOAT_TOL:
            return False
    for s in range(1, n):
        for k in range(N):
            hist[k] = 0
        for j in range(n):
            hist[(r[j] - r[(j - s) % n]) % N] += 1
        for t in range(R.shape[1]):
            acc[t] = 0
        for k in range(N):
            if hist[k]:
                for t in range(R.shape[1]):
                    acc[t] += hist[k] * R[k, t]
        for t in range(R.shape[1]):
            if acc[t] != 0:
                return False
    return True


_leaf_ok_numba = _njit(_leaf_ok_py)


def _make_dfs(leaf_ok):
    def dfs(n, N, start, prune, cs, sn, R, out):
        capacity = out.shape[0]
        r = np.zeros(n, dtype=np.int64)
        hist = np.zeros(N, dtype=np.int64)
        acc = np.zeros(R.shape[1], dtype=np.int64)
        count = 0
        k = start
        r[k] = -1
        while k >= start:
            r[k] += 1
            if r[k] == N:
                k -= 1
                continue
            if prune and k >= 1:
                re_ = 0.0
                im_ = 0.0
                for j in range(1, k + 1):
                    d = (r[j] - r[j - 1]) % N
                    re_ += cs[d]
                    im_ += sn[d]
                bound = n - k + PRUNE_SLACK
                if re_ * re_ + im_ * im_ > bound * bound:
                    continue
            if k == n - 1:
                if leaf_ok(r, n, N, cs, sn, R, hist, acc):
                    if count < capacity:
                        for j in range(n):
                            out[count, j] = r[j]
                    count += 1
                continue
            k += 1
            r[k] = -1
        return count

    return dfs


_dfs_py = _make_dfs(_leaf_ok_py)
circulant_dfs_numba = _njit(_make_dfs(_leaf_ok_numba)) if HAVE_NUMBA else _dfs_py


def _tables(N):
    from hadamat.cyclotomic import power_table_array

    ang = 2 * np.pi * np.arange(N) / N
    return np.cos(ang), np.sin(ang), power_table_array(N)


def circulant_search_numba(n, N, fix_first, prune, capacity=1024):
    cs, sn, R = _tables(N)
    start = 1 if fix_first else 0
    while True:
        out = np.zeros((capacity, n), dtype=np.int64)
        count = circulant_dfs_numba(n, N, start, prune, cs, sn, R, out)
        if count <= capacity:
            return out[:count]
        capacity = count


def _feasible(prefix, n, N, cs, sn):
    L = prefix.shape[1]
    if L < 2:
        return np.ones(prefix.shape[0], dtype=bool)
    d = (prefix[:, 1:] - prefix[:, :-1]) % N
    re_, im_ = cs[d].sum(axis=1), sn[d].sum(axis=1)
    bound = n - L + 1 + PRUNE_SLACK
    return re_ * re_ + im_ * im_ <= bound * bound


def circulant_search_numpy(n, N, fix_first, prune, chunk=1 << 20):
    cs, sn, R = _tables(N)
    start = 1 if fix_first else 0
    free = n - start
    head = 0
    while head < free - 1 and N ** (free - head) > chunk:
        head += 1
    found = []
    for lead in itertools.product(range(N), repeat=head):
        prefix = np.array([[0] * start + list(lead)], dtype=np.int64)
        if prune and any(not _feasible(prefix[:, :L], n, N, cs, sn)[0]
                         for L in range(2, prefix.shape[1] + 1)):
            continue
        for _ in range(prefix.shape[1], n):
            m = prefix.shape[0]
            prefix = np.hstack([np.repeat(prefix, N, axis=0),
                                np.tile(np.arange(N, dtype=np.int64), m)[:, None]])
            if prune:
                prefix = prefix[_feasible(prefix, n, N, cs, sn)]
            if prefix.shape[0] == 0:
                break
        if prefix.shape[0] == 0:
            continue
        mask = np.ones(prefix.shape[0], dtype=bool)
        for s in range(1, n):
            d = (prefix - np.roll(prefix, s, axis=1)) % N
            z2 = cs[d].sum(axis=1) ** 2 + sn[d].sum(axis=1) ** 2
            mask &= z2 <= FLOAT_TOL * FLOAT_TOL
        for row in prefix[mask]:
            if _exact_row_ok(row, n, N, R):
                found.append(row)
    if not found:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(found, dtype=np.int64)


def _exact_row_ok(row, n, N, R):
    for s in range(1, n):
        d = (row - np.roll(row, s)) % N
        if np.any(np.bincount(d, minlength=N) @ R):
            return False
    return True


def circulant_search(n, N, fix_first=True, prune=True, use_numba=None):
    """All first rows (exponent vectors) whose circulant is a BH(n, N), sorted."""
    jit = USE_NUMBA if use_numba is None else use_numba
    fn = circulant_search_numba if jit else circulant_search_numpy
    rows = fn(int(n), int(N), bool(fix_first), bool(prune))
    if rows.shape[0] == 0:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]
