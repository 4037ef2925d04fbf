"""Hadamard equivalence H2 = D1 P1 H1 P2 D2 decided by exhaustive permutation search.

For each row/column permutation pair (lexicographic, row permutation outer)
the dephased form of P1 H1 P2 is compared with the dephased form of H2. When
both matrices are Butson (every entry an M-th root of unity) the comparison
runs on integer exponent grids in :mod:`hadamat._kernels`; otherwise it runs on
exact CycloNum entries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from hadamat import _kernels
from hadamat.cyclotomic import CycloNum
from hadamat.matrix import (
    CycloMatrix,
    DimensionMismatchError,
    MatrixError,
    butson_exponents,
    dephase,
    dephase_factors,
    is_hadamard,
    permute_cols,
    permute_rows,
    scale_diag,
)

MAX_DIM = 5
FINGERPRINT_DIGITS = 9


class UnsupportedDimensionError(MatrixError):
    pass


@dataclass(frozen=True)
class EquivalenceWitness:
    P1: tuple[int, ...]
    P2: tuple[int, ...]
    D1: tuple[CycloNum, ...]
    D2: tuple[CycloNum, ...]


@dataclass(frozen=True)
class EquivVerdict:
    equivalent: bool
    witness: EquivalenceWitness | None
    pairs_examined: int
    matching_pairs: int | None = None
    prefiltered: bool = False
    backend: str = field(default="exact")

    def __bool__(self) -> bool:
        return self.equivalent


def apply_transform(h: CycloMatrix, P1: Sequence[int], P2: Sequence[int],
                    D1: Sequence[CycloNum] | None = None,
                    D2: Sequence[CycloNum] | None = None) -> CycloMatrix:
    """D1 P1 H P2 D2 with (P1 H P2)[i, j] = H[P1[i], P2[j]]."""
    return scale_diag(permute_cols(permute_rows(h, P1), P2), D1, D2)


def replay(witness: EquivalenceWitness, h1: CycloMatrix, h2: CycloMatrix) -> bool:
    if h1.dim != h2.dim or len(witness.P1) != h1.dim:
        return False
    try:
        out = apply_transform(h1, witness.P1, witness.P2, witness.D1, witness.D2)
    except (MatrixError, ValueError):
        return False
    return out.same_entries(h2)


def _fingerprint_values(h: CycloMatrix) -> np.ndarray:
    e = butson_exponents(h)
    if e is not None:
        # exact exponent arithmetic, so equal invariants give bit-equal floats
        k = (e[:, :, None, None] - e[:, None, None, :] - e.T[None, :, :, None] + e[None, None, :, :]) % h.order
        ang = 2 * np.pi * (k.ravel() / h.order)
        return np.cos(ang) + 1j * np.sin(ang)
    a = h.to_numpy()
    return np.einsum("ij,il,kj,kl->ijkl", a, a.conj(), a.conj(), a).ravel()


def canonical_fingerprint(h: CycloMatrix) -> tuple[tuple[float, float], ...]:
    """Sorted multiset of h_ij conj(h_il) conj(h_kj) h_kl over all (i, j, k, l).

    Each product is unchanged by unimodular row/column scaling and only
    relabelled by permutations, so the multiset is an equivalence invariant.
    Values are rounded to 1e-9.
    """
    v = _fingerprint_values(h)
    re = np.round(v.real, FINGERPRINT_DIGITS) + 0.0
    im = np.round(v.imag, FINGERPRINT_DIGITS) + 0.0
    return tuple(sorted(zip(re.tolist(), im.tolist())))


def _same_order(h1: CycloMatrix, h2: CycloMatrix) -> tuple[CycloMatrix, CycloMatrix]:
    if h1.order == h2.order:
        return h1, h2
    M = h1.order * h2.order // math.gcd(h1.order, h2.order)
    return h1.embed(M), h2.embed(M)


def _witness(h1: CycloMatrix, h2: CycloMatrix, p1, p2) -> EquivalenceWitness:
    x = apply_transform(h1, p1, p2)
    r1, c1 = dephase_factors(x)
    r2, c2 = dephase_factors(h2)
    D1 = tuple(a * b.conj() for a, b in zip(r1, r2))
    D2 = tuple(a * b.conj() for a, b in zip(c1, c2))
    return EquivalenceWitness(tuple(int(i) for i in p1), tuple(int(i) for i in p2), D1, D2)


def _exact_scan(h1, h2, perms, exhaustive):
    target = dephase(h2).rows
    first = None
    count = 0
    examined = 0
    for p1 in perms:
        rows = permute_rows(h1, p1)
        for p2 in perms:
            examined += 1
            if dephase(permute_cols(rows, p2)).rows == target:
                count += 1
                if first is None:
                    first = (p1, p2)
                    if not exhaustive:
                        return first, count, examined
    return first, count, examined


def equiv(h1: CycloMatrix, h2: CycloMatrix, exhaustive: bool = False,
          prefilter: bool = False, check_inputs: bool = True,
          use_numba: bool | None = None) -> EquivVerdict:
    """Decide whether h2 = D1 P1 h1 P2 D2.

    ``exhaustive`` keeps scanning after the first witness and reports how many
    permutation pairs match; the returned witness is always the
    lexicographically first. ``prefilter`` compares fingerprints first and
    returns a non-equivalent verdict without searching on mismatch.
    """
    if h1.dim != h2.dim:
        raise DimensionMismatchError(f"dimensions {h1.dim} and {h2.dim} differ")
    n = h1.dim
    if n > MAX_DIM:
        raise UnsupportedDimensionError(f"exhaustive equivalence is limited to n <= {MAX_DIM}")
    if check_inputs:
        for label, h in (("first", h1), ("second", h2)):
            if not is_hadamard(h):
                raise MatrixError(f"{label} matrix is not a complex Hadamard matrix")
    h1, h2 = _same_order(h1, h2)
    if prefilter and canonical_fingerprint(h1) != canonical_fingerprint(h2):
        return EquivVerdict(False, None, 0, 0 if exhaustive else None, prefiltered=True)

    e1, e2 = butson_exponents(h1), butson_exponents(h2)
    if e1 is not None and e2 is not None:
        M = h1.order
        T = (e2 - e2[:, :1] - e2[:1, :] + e2[0, 0]) % M
        perms = _kernels.permutation_array(n)
        first, count, examined = _kernels.equiv_scan(e1, T, perms, M, exhaustive, use_numba)
        pair = None if first < 0 else (perms[first // len(perms)], perms[first % len(perms)])
        jit = _kernels.USE_NUMBA if use_numba is None else use_numba
        backend = "numba" if jit else "numpy"
    else:
        perms = list(permutations(range(n)))
        pair, count, examined = _exact_scan(h1, h2, perms, exhaustive)
        backend = "exact"
    if pair is None:
        return EquivVerdict(False, None, examined, count if exhaustive else None, backend=backend)
    w = _witness(h1, h2, *pair)
    if not replay(w, h1, h2):  # pragma: no cover - would indicate a kernel bug
        raise AssertionError("witness failed exact replay")
    return EquivVerdict(True, w, examined, count if exhaustive else None, backend=backend)


def identity_witness(h: CycloMatrix) -> EquivalenceWitness:
    one = CycloNum.one(h.order)
    n = h.dim
    return EquivalenceWitness(tuple(range(n)), tuple(range(n)), (one,) * n, (one,) * n)
