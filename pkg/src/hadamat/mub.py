"""Mutual unbiasedness of bases given as matrices whose columns are the basis vectors."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from hadamat.cyclotomic import CycloNum
from hadamat.matrix import (
    CycloMatrix,
    DimensionMismatchError,
    conj_transpose,
    is_hadamard,
    is_unitary_diagonal,
    matmul,
)


class MubError(ValueError):
    pass


class ExceedsMaximumError(MubError):
    """More than n + 1 bases were supplied in dimension n."""


class InvalidBasisError(MubError):
    pass


@dataclass(frozen=True)
class Basis:
    name: str
    matrix: CycloMatrix

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def normalized(self) -> bool:
        return self.matrix.scale_exp == 1


def classify(matrix: CycloMatrix) -> str:
    if is_unitary_diagonal(matrix):
        return "identity" if all(matrix[i, i] == 1 for i in range(matrix.dim)) else "unitary-diagonal"
    if is_hadamard(matrix):
        return "hadamard"
    return "invalid"


def make_basis(name: str, matrix: CycloMatrix) -> Basis:
    """Attach the scale convention: Hadamard members carry 1/sqrt(n), diagonals none."""
    kind = classify(matrix)
    if kind == "invalid":
        raise InvalidBasisError(f"{name} is neither complex Hadamard nor a unitary diagonal")
    return Basis(name, matrix.with_scale(1 if kind == "hadamard" else 0))


@dataclass(frozen=True)
class PairVerdict:
    unbiased: bool | None
    cell: tuple[int, int] | None = None
    defect: CycloNum | None = None
    error: str | None = None


@dataclass(frozen=True)
class MubReport:
    bases: tuple[str, ...]
    pairwise: dict[tuple[int, int], PairVerdict]
    member_errors: dict[str, str] = field(default_factory=dict)
    witness: tuple[tuple[int, int], int, int, CycloNum] | None = None

    @property
    def verdict(self) -> bool:
        return not self.member_errors and all(v.unbiased for v in self.pairwise.values())

    def __bool__(self) -> bool:
        return self.verdict


def _pair(b1: Basis, b2: Basis) -> PairVerdict:
    if b1.dim != b2.dim:
        raise DimensionMismatchError("bases have different dimensions")
    n = b1.dim
    # normalized |<u, v>|^2 = |raw|^2 / n^s; unbiased iff it equals 1/n
    s = b1.matrix.scale_exp + b2.matrix.scale_exp
    target = Fraction(n ** s, n)
    inner = matmul(conj_transpose(b1.matrix), b2.matrix)
    for i, j, x in inner.entries():
        a2 = x.abs2()
        if a2 != target:
            return PairVerdict(False, (i, j), a2 * CycloNum.from_int(a2.order, Fraction(n, n ** s)) - 1)
    return PairVerdict(True)


def _as_basis(b) -> Basis:
    if isinstance(b, Basis):
        return make_basis(b.name, b.matrix)
    if isinstance(b, CycloMatrix):
        return make_basis("?", b)
    return make_basis(*b)


def unbiased(b1, b2) -> PairVerdict:
    """All n^2 normalized inner products have squared modulus exactly 1/n.

    Scales are assigned by :func:`make_basis`, whatever the inputs carry.
    """
    return _pair(_as_basis(b1), _as_basis(b2))


def check_mub_set(bases: Sequence[Basis | tuple[str, CycloMatrix]]) -> MubReport:
    """Pairwise table for a claimed MUB set.

    Raw ``(name, matrix)`` pairs are classified with :func:`make_basis`; a member
    that is not a valid basis is recorded as an error and every pair touching
    it is an error cell.
    """
    items: list[Basis | None] = []
    names: list[str] = []
    errors: dict[str, str] = {}
    for b in bases:
        name = b.name if isinstance(b, Basis) else b[0]
        names.append(name)
        try:
            items.append(_as_basis(b))
        except InvalidBasisError as exc:
            errors[name] = str(exc)
            items.append(None)
    dims = {_mat(b).dim for b in bases}
    if len(dims) > 1:
        raise DimensionMismatchError(f"bases of different dimensions {sorted(dims)}")
    n = dims.pop()
    if len(items) > n + 1:
        raise ExceedsMaximumError(f"{len(items)} bases exceed the maximum n + 1 = {n + 1}")
    table: dict[tuple[int, int], PairVerdict] = {}
    witness = None
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] is None or items[j] is None:
                table[(i, j)] = PairVerdict(None, error="invalid member")
                continue
            v = _pair(items[i], items[j])
            table[(i, j)] = v
            if not v.unbiased and witness is None:
                witness = ((i, j), v.cell[0], v.cell[1], v.defect)
    return MubReport(tuple(names), table, errors, witness)


def _mat(b) -> CycloMatrix:
    return b.matrix if isinstance(b, Basis) else b[1]


def mub_extend_greedy(seed: Sequence[Basis], candidates: Sequence[Basis]) -> list[Basis]:
    """Append candidates, in order, that keep the set mutually unbiased."""
    if not check_mub_set(seed):
        raise MubError("seed is not a valid MUB set")
    chosen = [_as_basis(b) for b in seed]
    n = chosen[0].dim if chosen else None
    for c in map(_as_basis, candidates):
        if n is not None and len(chosen) >= n + 1:
            break
        if all(_pair(b, c).unbiased for b in chosen):
            chosen.append(c)
            n = c.dim
    return chosen


def identity_basis(n: int, order: int) -> Basis:
    return Basis(f"I_{n}", CycloMatrix.identity(n, order))
