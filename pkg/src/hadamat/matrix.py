"""Exact square matrices over a cyclotomic field, with Gram-based verdicts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from hadamat.cyclotomic import (
    CycloNum,
    OrderMismatchError,
    embed,
    format_entry,
    root_exponent,
    root_of_unity,
)


class MatrixError(ValueError):
    pass


class DimensionMismatchError(MatrixError):
    pass


class NotUnimodularError(MatrixError):
    pass


@dataclass(frozen=True)
class CycloMatrix:
    """n x n matrix of CycloNum sharing one root order.

    ``scale_exp`` s is metadata for an implicit global factor n^(-s/2); the
    stored entries are always the raw ones.
    """

    order: int
    rows: tuple[tuple[CycloNum, ...], ...]
    scale_exp: int = 0

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise MatrixError("empty matrix")
        for row in self.rows:
            if len(row) != n:
                raise DimensionMismatchError("matrix must be square")
            for x in row:
                if x.order != self.order:
                    raise OrderMismatchError(f"entry of order {x.order} in order-{self.order} matrix")
        if self.scale_exp < 0:
            raise MatrixError("scale_exp must be non-negative")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], order: int, scale_exp: int = 0) -> "CycloMatrix":
        out = []
        for row in rows:
            out.append(tuple(x if isinstance(x, CycloNum) else CycloNum.from_int(order, x) for x in row))
        return cls(order, tuple(out), scale_exp)

    @classmethod
    def from_exponents(cls, exps, M: int, root_order: int | None = None) -> "CycloMatrix":
        """Entries zeta_R^e for an integer exponent grid, stored at order M."""
        R = root_order or M
        return cls.from_rows(
            [[embed(root_of_unity(R, int(e)), M) for e in row] for row in exps], M
        )

    @classmethod
    def identity(cls, n: int, order: int) -> "CycloMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], order)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> CycloNum:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterable[tuple[int, int, CycloNum]]:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def with_scale(self, s: int) -> "CycloMatrix":
        return CycloMatrix(self.order, self.rows, s)

    def embed(self, M2: int) -> "CycloMatrix":
        rows = tuple(tuple(embed(x, M2) for x in row) for row in self.rows)
        return CycloMatrix(M2, rows, self.scale_exp)

    def to_numpy(self, apply_scale: bool = False) -> np.ndarray:
        a = np.array([[x.to_complex() for x in row] for row in self.rows], dtype=complex)
        if apply_scale and self.scale_exp:
            a = a * self.dim ** (-self.scale_exp / 2)
        return a

    def same_entries(self, other: "CycloMatrix") -> bool:
        return self.order == other.order and self.rows == other.rows

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(self.order, tuple(zip(*self.rows)), self.scale_exp)

    def conj(self) -> "CycloMatrix":
        return CycloMatrix(self.order, tuple(tuple(x.conj() for x in r) for r in self.rows), self.scale_exp)

    def conj_transpose(self) -> "CycloMatrix":
        return conj_transpose(self)

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        return matmul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(format_entry(x) for x in row) for row in self.rows)


class HadamardVerdict(NamedTuple):
    is_hadamard: bool
    failing_cell: tuple[int, int, CycloNum] | None = None

    def __bool__(self) -> bool:
        return self.is_hadamard


def _check_compatible(a: CycloMatrix, b: CycloMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimensions {a.dim} and {b.dim} differ")
    if a.order != b.order:
        raise OrderMismatchError(f"orders {a.order} and {b.order} differ")


def _dot(xs: Sequence[CycloNum], ys: Sequence[CycloNum], order: int) -> CycloNum:
    total = CycloNum.zero(order)
    for x, y in zip(xs, ys):
        if not x.is_zero() and not y.is_zero():
            total = total + x * y
    return total


def matmul(a: CycloMatrix, b: CycloMatrix) -> CycloMatrix:
    _check_compatible(a, b)
    cols = list(zip(*b.rows))
    rows = tuple(tuple(_dot(r, c, a.order) for c in cols) for r in a.rows)
    return CycloMatrix(a.order, rows)


def conj_transpose(h: CycloMatrix) -> CycloMatrix:
    return CycloMatrix(h.order, tuple(zip(*(tuple(x.conj() for x in r) for r in h.rows))), h.scale_exp)


def gram(h: CycloMatrix) -> CycloMatrix:
    """H H* computed on the raw entries."""
    conj_rows = [tuple(x.conj() for x in r) for r in h.rows]
    n = h.dim
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for k in range(i, n):
            v = _dot(h.rows[i], conj_rows[k], h.order)
            out[i][k] = v
            out[k][i] = v if i == k else v.conj()
    return CycloMatrix(h.order, tuple(tuple(r) for r in out))


def _scalar_identity_defect(g: CycloMatrix, diag_value: int) -> tuple[int, int, CycloNum] | None:
    for i, j, x in g.entries():
        target = diag_value if i == j else 0
        if x != target:
            return (i, j, x)
    return None


def is_hadamard(h: CycloMatrix) -> HadamardVerdict:
    """Unimodular entries and H H* = n I, both exact."""
    for i, j, x in h.entries():
        if not x.is_unimodular():
            return HadamardVerdict(False, (i, j, x))
    bad = _scalar_identity_defect(gram(h), h.dim)
    return HadamardVerdict(bad is None, bad)


def is_unitary(h: CycloMatrix) -> bool:
    """Gram of the raw entries equals n^s I, i.e. the scaled matrix is unitary."""
    return _scalar_identity_defect(gram(h), h.dim ** h.scale_exp) is None


def is_inverse_orthogonal(o: CycloMatrix) -> bool:
    """O times the entrywise-inverse transpose equals n I."""
    n = o.dim
    inv = [[None] * n for _ in range(n)]
    for i, j, x in o.entries():
        if x.is_zero():
            raise MatrixError(f"zero entry at ({i}, {j}); inverse-orthogonality needs nonzero entries")
        inv[j][i] = x.inverse()
    prod = matmul(o, CycloMatrix(o.order, tuple(tuple(r) for r in inv)))
    return _scalar_identity_defect(prod, n) is None


def is_diagonal(h: CycloMatrix) -> bool:
    return all(x.is_zero() for i, j, x in h.entries() if i != j)


def is_unitary_diagonal(h: CycloMatrix) -> bool:
    return is_diagonal(h) and all(h[i, i].is_unimodular() for i in range(h.dim))


def permute_rows(h: CycloMatrix, perm: Sequence[int]) -> CycloMatrix:
    """Row i of the result is row perm[i] of h."""
    if sorted(perm) != list(range(h.dim)):
        raise MatrixError(f"{perm!r} is not a permutation of 0..{h.dim - 1}")
    return CycloMatrix(h.order, tuple(h.rows[p] for p in perm), h.scale_exp)


def permute_cols(h: CycloMatrix, perm: Sequence[int]) -> CycloMatrix:
    """Column j of the result is column perm[j] of h."""
    if sorted(perm) != list(range(h.dim)):
        raise MatrixError(f"{perm!r} is not a permutation of 0..{h.dim - 1}")
    return CycloMatrix(h.order, tuple(tuple(r[p] for p in perm) for r in h.rows), h.scale_exp)


def scale_diag(h: CycloMatrix, left: Sequence[CycloNum] | None = None,
               right: Sequence[CycloNum] | None = None) -> CycloMatrix:
    """diag(left) . H . diag(right)."""
    n = h.dim
    for d in (left, right):
        if d is not None and len(d) != n:
            raise DimensionMismatchError(f"diagonal of length {len(d)} for dimension {n}")
    rows = []
    for i, row in enumerate(h.rows):
        new = []
        for j, x in enumerate(row):
            if left is not None:
                x = left[i] * x
            if right is not None:
                x = x * right[j]
            new.append(x)
        rows.append(tuple(new))
    return CycloMatrix(h.order, tuple(rows), h.scale_exp)


def dephase_factors(h: CycloMatrix) -> tuple[list[CycloNum], list[CycloNum]]:
    """Row and column multipliers r, c with diag(r) H diag(c) dephased."""
    for i, j, x in h.entries():
        if not x.is_unimodular():
            raise NotUnimodularError(f"entry ({i}, {j}) is not unimodular")
    r = [h[i, 0].conj() for i in range(h.dim)]
    c = [(r[0] * h[0, j]).conj() for j in range(h.dim)]
    return r, c


def dephase(h: CycloMatrix) -> CycloMatrix:
    """Equivalent matrix with unit first row and first column."""
    r, c = dephase_factors(h)
    return scale_diag(h, r, c)


def butson_exponents(h: CycloMatrix) -> np.ndarray | None:
    """Integer grid e with h_ij = zeta_M^e_ij, or None if some entry is not an M-th root."""
    out = np.empty((h.dim, h.dim), dtype=np.int64)
    for i, j, x in h.entries():
        k = root_exponent(x)
        if k is None:
            return None
        out[i, j] = k
    return out
