"""Generators for the named matrices: Fourier, 2x2 solutions, circulants, and the catalog.

Catalog entries are transcribed token by token from the published displays
(``_DISPLAYS``) and evaluated at the universal order 60 under the principal
branch ``(-1)^(p/q) = exp(i pi p/q)``. Damaged tokens are repaired through
``_TOKEN_REPAIRS`` / ``_CELL_REPAIRS`` and every repair is reported as an
erratum.
"""
from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from hadamat.cyclotomic import (
    _poly_divexact,
    CycloNum,
    NotRepresentableError,
    embed,
    root_of_unity,
    sqrt,
    sqrt_int,
)
from hadamat.matrix import (
    CycloMatrix,
    MatrixError,
    conj_transpose,
    matmul,
)

CATALOG_ORDER = 60


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class CirculantSpec:
    first_row: tuple[CycloNum, ...]

    @property
    def dim(self) -> int:
        return len(self.first_row)


@dataclass(frozen=True)
class NamedMatrix:
    name: str
    matrix: CycloMatrix
    provenance: str


def fourier(n: int, order: int | None = None) -> CycloMatrix:
    """F_n with entry (j, k) = zeta_n^(jk); stored at ``order`` (default n)."""
    if n < 1:
        raise ConstructionError("fourier needs n >= 1")
    M = order or n
    if M % n:
        raise ConstructionError(f"order {M} is not a multiple of {n}")
    return CycloMatrix.from_exponents([[j * k % n for k in range(n)] for j in range(n)], M, n)


def circulant(spec: CirculantSpec | Sequence[CycloNum]) -> CycloMatrix:
    """Entry (i, j) = first_row[(j - i) mod n]; each row shifts the previous one right."""
    row = spec.first_row if isinstance(spec, CirculantSpec) else tuple(spec)
    n = len(row)
    if n == 0:
        raise ConstructionError("empty first row")
    M = row[0].order
    return CycloMatrix(M, tuple(tuple(row[(j - i) % n] for j in range(n)) for i in range(n)))


def c5_pattern(a: CycloNum) -> CycloMatrix:
    """The order-5 circulant with first row (1, a, a^4, a^4, a)."""
    a4 = a ** 4
    return circulant([CycloNum.one(a.order), a, a4, a4, a])


def c5_factor(a: CycloNum) -> CycloNum:
    return 1 + a + a ** 2 + a ** 3 + a ** 4


C5_EXPONENTS = (0, 1, 4, 4, 1)


def c5_offdiag_quotients() -> dict[tuple[int, int], tuple[int, list[int]] | None]:
    """Symbolic check that 1 + a + ... + a^4 divides every off-diagonal entry of
    C5 C5^(-1), where C5^(-1)[i, j] = 1 / C5[j, i].

    Entry (i, k) is the Laurent polynomial sum_j a^(e_ij - e_kj). Returns, per
    off-diagonal cell, (shift, quotient) with a^shift * entry = quotient * (1 + ... + a^4),
    or None when the division leaves a remainder.
    """
    n = len(C5_EXPONENTS)
    e = [[C5_EXPONENTS[(j - i) % n] for j in range(n)] for i in range(n)]
    out = {}
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            powers = [e[i][j] - e[k][j] for j in range(n)]
            shift = -min(powers)
            poly = [0] * (max(powers) + shift + 1)
            for p in powers:
                poly[p + shift] += 1
            try:
                out[(i, k)] = (shift, _poly_divexact(poly, [1, 1, 1, 1, 1]))
            except ArithmeticError:
                out[(i, k)] = None
    return out


# 2x2 ------------------------------------------------------------------------

_C2_SLOTS = ("a", "b", "c", "d")


def c2_solutions(a, b, c, d, which: int, literal: bool = False) -> CycloMatrix:
    """[[a, b], [c, d]] with slot ``which`` (1..4 for a, b, c, d) solved from bc + ad = 0.

    The supplied value for the solved slot is ignored. ``literal=True`` uses the
    printed corner formulas instead (+bc/d for the first, -bc/a for the third),
    which do not satisfy the constraint.
    """
    if which not in (1, 2, 3, 4):
        raise ConstructionError("which must be 1..4")
    vals = {"a": a, "b": b, "c": c, "d": d}
    M = next(v.order for v in vals.values() if isinstance(v, CycloNum))
    vals = {k: v if isinstance(v, CycloNum) else CycloNum.from_int(M, v) for k, v in vals.items()}
    a, b, c, d = (vals[k] for k in _C2_SLOTS)

    def div(x, y):
        if y.is_zero():
            raise ConstructionError("zero denominator in the 2x2 constraint")
        return x / y

    if which == 1:
        vals["a"] = div(b * c, d) if literal else -div(b * c, d)
    elif which == 2:
        vals["b"] = -div(a * d, c)
    elif which == 3:
        vals["c"] = -div(b * c, a) if literal else -div(a * d, b)
    else:
        vals["d"] = -div(b * c, a)
    return CycloMatrix(M, ((vals["a"], vals["b"]), (vals["c"], vals["d"])))


def c2_constraint(h: CycloMatrix) -> CycloNum:
    return h[0, 1] * h[1, 0] + h[0, 0] * h[1, 1]


# 3x3 ------------------------------------------------------------------------


def c3_constraints(a: CycloNum, b: CycloNum, c: CycloNum) -> tuple[CycloNum, CycloNum]:
    """Residuals a^2 b + b^2 c + a c^2 and a b^2 + a^2 c + b c^2 of the circulant (a, b, c)."""
    return a * a * b + b * b * c + a * c * c, a * b * b + a * a * c + b * c * c


class _NotRepresentable:
    def __repr__(self) -> str:
        return "NOT_REPRESENTABLE"

    def __bool__(self) -> bool:
        return False


NOT_REPRESENTABLE = _NotRepresentable()


def c3_quadratic_roots(b: CycloNum, c: CycloNum):
    """Roots in a of b a^2 + c^2 a + b^2 c = 0 (the first residual), or a pair of
    NOT_REPRESENTABLE markers if the discriminant has no square root in the field.

    Roots are sorted by (modulus, argument in [0, 2 pi)).
    """
    if b.is_zero():
        raise ConstructionError("b must be nonzero")
    disc = c ** 4 - 4 * b ** 3 * c
    s = sqrt(disc)
    if s is None:
        return NOT_REPRESENTABLE, NOT_REPRESENTABLE
    two_b = 2 * b
    roots = [(-c * c + s) / two_b, (-c * c - s) / two_b]
    return tuple(sorted(roots, key=_sort_key))


def _sort_key(x: CycloNum):
    z = x.to_complex()
    ang = cmath.phase(z) % (2 * cmath.pi) if abs(z) > 1e-12 else 0.0
    return (round(abs(z), 12), round(ang, 12))


# transfer -------------------------------------------------------------------

TRANSFER_CONVENTIONS = ("H1*H2", "H2*H1", "H1H2*", "H2H1*")


def transfer(h1: CycloMatrix, h2: CycloMatrix, M: int | None = None,
             convention: str = "H1*H2") -> CycloMatrix:
    """Normalized product (1/sqrt n) H1* H2 (or one of the other orderings)."""
    if h1.dim != h2.dim:
        raise MatrixError("dimension mismatch")
    M = M or h1.order
    n = h1.dim
    try:
        root_n = sqrt_int(n, M)
    except ValueError as exc:
        raise NotRepresentableError(str(exc)) from exc
    a, b = h1.embed(M) if h1.order != M else h1, h2.embed(M) if h2.order != M else h2
    if convention == "H1*H2":
        prod = matmul(conj_transpose(a), b)
    elif convention == "H2*H1":
        prod = matmul(conj_transpose(b), a)
    elif convention == "H1H2*":
        prod = matmul(a, conj_transpose(b))
    elif convention == "H2H1*":
        prod = matmul(b, conj_transpose(a))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    inv = root_n * CycloNum.from_int(M, Fraction(1, n))
    return CycloMatrix(M, tuple(tuple(x * inv for x in row) for row in prod.rows))


# catalog --------------------------------------------------------------------

_POW_RE = re.compile(r"^(-?)\(-1\)\^(\d+)/(\d+)$")


def display_value(token: str, M: int = CATALOG_ORDER) -> CycloNum:
    """Evaluate a display token under the principal branch.

    Tokens: integers, ``i``/``-i``, ``w``/``w^2`` (omega = zeta_3), ``g``/``g^2``
    (gamma, same value), ``(-1)^p/q`` and ``-(-1)^p/q``.
    """
    if re.fullmatch(r"-?\d+", token):
        return CycloNum.from_int(M, int(token))
    if token in ("i", "-i"):
        return embed(root_of_unity(4, 1 if token == "i" else 3), M)
    if token in ("w", "g"):
        return embed(root_of_unity(3, 1), M)
    if token in ("w^2", "g^2"):
        return embed(root_of_unity(3, 2), M)
    m = _POW_RE.match(token)
    if m:
        p, q = int(m.group(2)), int(m.group(3))
        # (-1)^(p/q) = zeta_(2q)^p
        v = embed(root_of_unity(2 * q, p), M)
        return -v if m.group(1) else v
    raise ConstructionError(f"unparseable display token {token!r}")


M13 = "-(-1)^1/3"
P23 = "(-1)^2/3"


def _circ3(first: Sequence[str]) -> list[list[str]]:
    r = list(first)
    return [[r[(j - i) % 3] for j in range(3)] for i in range(3)]


def _diag3(diag: str, off: str) -> list[list[str]]:
    return [[diag if i == j else off for j in range(3)] for i in range(3)]


def _rows(*lines: str) -> list[list[str]]:
    return [line.split() for line in lines]


# name -> (equation tag, rows of display tokens), transcribed as printed
_DISPLAYS: dict[str, tuple[str, list[list[str]]]] = {
    "F_3": ("f3", _rows("1 1 1", "1 g g^2", "1 g^2 g")),
    "A_1": ("a15", _rows("w 1 1", "1 w 1", "1 1 w")),
    "A_2": ("a15", _rows("1 w 1", "1 1 w", "w 1 1")),
    "A_3": ("a15", _rows("w w 1", "1 w w", "w 1 w")),
    "A_4": ("a15", _rows("1 1 w", "w 1 1", "1 w 1")),
    "A_5": ("a15", _rows("w 1 w", "w w 1", "1 w w")),
    "B_1": ("b15", _rows("w^2 1 1", "1 w^2 1", "1 1 w^2")),
    "B_2": ("b15", _rows("1 w^2 1", "1 1 w^2", "w^2 1 1")),
    "B_3": ("b15", _rows("w^2 w^2 1", "1 w^2 w^2", "w^2 1 w^2")),
    "B_4": ("b15", _rows("1 1 w^2", "w^2 1 1", "1 w^2 1")),
    "B_5": ("b15", _rows("w^2 1 w^2", "w^2 w^2 1", "1 w^2 w^2")),
    "A_11": ("a1112", _diag3(M13, "1")),
    "A_12": ("a1112", _rows(f"{P23} 1 1", "1 (-1^2/3 1", f"1 1 {P23}")),
    "A_1112": ("a11121211", _diag3("(-1)^1/6", "-i")),
    "A_1211": ("a11121211", _diag3("(-1)^5/6", "-i")),
    "A_21": ("a2122", _rows(f"1 {M13} 1", f"1 1 {M13}", f"{M13} 1 1")),
    "A_22": ("a2122", _rows(f"1 {P23} 1", "1 1 (-1^2/3", f"{P23} 1 1")),
    "A_31": ("a3132", _rows(f"{M13} {M13} 1", f"1 {M13} {M13}", f"{M13} 1 {M13}")),
    "A_32": ("a3132", _rows(f"{P23} {P23} 1", "1 (-1^2/3 (-1^2/3", f"{P23} 1 (-1^2/3)")),
    "A_3132": ("A31323231", _diag3("i", "-(-1)^1/6")),
    "A_3231": ("A31323231", _diag3("i", "-(-1)^5/6")),
    "D_11": ("d11d12", _diag3("(-1)^1/6", "(-1)^5/6")),
    "D_12": ("d11d12", _diag3("(-1)^5/6", "(-1)^1/6")),
    "A_41": ("a4142", _circ3(["1", "1", M13])),
    "A_42": ("a4142", _circ3(["1", "1", P23])),
    "A_51": ("a5152", _circ3([M13, "1", M13])),
    "A_52": ("a5152", _circ3([P23, "1", P23])),
    "A_5152": ("A5152a5251", _diag3("i", "-(-1)^1/6")),
    "A_5251": ("A5152a5251", _diag3("i", "-(-1)^5/6")),
    "B_11": ("b1112", _diag3(P23, "1")),
    "B_12": ("b1112", _diag3(M13, "1")),
    "B_21": ("b21b22", _diag3(P23, "1")),
    "B_22": ("b21b22", _diag3(M13, "1")),
    "B_31": ("b3132", _circ3([P23, P23, "1"])),
    "B_32": ("b3132", _circ3([M13, M13, "1"])),
    "B_41": ("b4142", _circ3(["1", "1", P23])),
    "B_42": ("b4142", _circ3(["1", "1", M13])),
    "B_4142": ("B41424241", _diag3("(-1)^5/6", "-i")),
    "B_4241": ("B41424241", _diag3("(-1)^1/6", "-i")),
    "B_51": ("B5152", _circ3([P23, "1", P23])),
    "B_52": ("B5152", _circ3([M13, "1", M13])),
    "I_2/3": ("I_{2/3}", _diag3(P23, "0")),
    "I_1/3": ("I_{m1/3}", _diag3(M13, "0")),
    "D_1": ("d12", _rows(
        "1 -(-1)^1/5 (-1)^4/5 (-1)^4/5 -(-1)^1/5",
        "-(-1)^1/5 1 -(-1)^1/5 (-1)^4/5 (-1)^4/5",
        "(-1)^4/5 -(-1)^1/5 1 -(-1)^1/5 (-1)^4/5",
        "(-1)^4/5 (-1)^4/5 -(-1)^1/5 1 -(-1)^1/5",
        "-(-1)^1/5 (-1)^4/5 (-1)^4/5 -(-1)^1/5 1",
    )),
    "D_2": ("d12", _rows(
        "1 (-1)^2/5 -(-1)^3/5 -(-1)^3/5 (-1)^2/5",
        "(-1)^2/5 1 (-1)^2/5 -(-1)^3/5 -(-1)^3/5",
        "-(-1)^3/5 (-1)^2/5 1 -(-1)^2/5 -(-1)^3/5",
        "-(-1)^3/5 -(-1)^3/5 (-1)^2/5 1 (-1)^2/5",
        "(-1)^2/5 -(-1)^3/5 -(-1)^3/5 (-1)^2/5 1",
    )),
    "D_3": ("d34", _rows(
        "1 -(-1)^3/5 (-1)^2/5 (-1)^2/5 -(-1)^3/5",
        "-(-1)^3/5 1 -(-1)^3/5 (-1)^2/5 (-1)^2/5",
        "(-1)^2/5 -(-1)^3/5 1 -(-1)^3/5 (-1)^2/5",
        "(-1)^2/5 (-1)^2/5 -(-1)^3/5 1 -(-1)^3/5",
        "-(-1)^3/5 (-1)^2/5 (-1)^2/5 -(-1)^3/5 1",
    )),
    "D_4": ("d34", _rows(
        "1 (-1)^4/5 -(-1)^1/5 -(-1)^1/5 (-1)^4/5",
        "(-1)^4/5 1 (-1)^4/5 -(-1)^1/5 -(-1)^1/5",
        "-(-1)^1/5 (-1)^4/5 1 (-1)^4/5 -(-1)^1/5",
        "-(-1)^1/5 -(-1)^1/5 (-1)^4/5 1 (-1)^4/5",
        "(-1)^4/5 -(-1)^1/5 -(-1)^1/5 (-1)^4/5 1",
    )),
}

# typographically damaged tokens -> intended token
_TOKEN_REPAIRS = {
    "(-1^2/3": ("(-1)^2/3", "missing closing parenthesis"),
    "(-1^2/3)": ("(-1)^2/3", "misplaced parenthesis"),
}

# (name, row, col) -> (printed token, repaired token, reason)
_CELL_REPAIRS = {
    ("D_2", 2, 3): ("-(-1)^2/5", "(-1)^2/5",
                    "sign breaks the circulant pattern; every other row has (-1)^2/5 at this offset"),
}


@dataclass(frozen=True)
class Erratum:
    kind: str
    location: str
    printed: str
    repaired: str
    note: str


def display_tokens(name: str, repaired: bool = True) -> list[list[str]]:
    """Display tokens for a catalog name, optionally with repairs applied."""
    _tag, rows = _DISPLAYS[name]
    out = [list(r) for r in rows]
    if not repaired:
        return out
    for i, row in enumerate(out):
        for j, tok in enumerate(row):
            if tok in _TOKEN_REPAIRS:
                row[j] = _TOKEN_REPAIRS[tok][0]
            if (name, i, j) in _CELL_REPAIRS:
                printed, fixed, _ = _CELL_REPAIRS[(name, i, j)]
                assert tok == printed
                row[j] = fixed
    return out


def display_errata() -> list[Erratum]:
    out = []
    for name, (tag, rows) in _DISPLAYS.items():
        for i, row in enumerate(rows):
            for j, tok in enumerate(row):
                if tok in _TOKEN_REPAIRS:
                    fixed, why = _TOKEN_REPAIRS[tok]
                    out.append(Erratum("typography", f"{name}[{i},{j}] ({tag})", tok, fixed, why))
                if (name, i, j) in _CELL_REPAIRS:
                    printed, fixed, why = _CELL_REPAIRS[(name, i, j)]
                    out.append(Erratum("entry", f"{name}[{i},{j}] ({tag})", printed, fixed, why))
    return out


def from_display(name: str, M: int = CATALOG_ORDER, repaired: bool = True) -> CycloMatrix:
    return CycloMatrix.from_rows(
        [[display_value(t, M) for t in row] for row in display_tokens(name, repaired)], M
    )


def c2_reference(which: int, M: int = CATALOG_ORDER, literal: bool = False) -> CycloMatrix:
    one = CycloNum.one(M)
    return c2_solutions(one, one, one, one, which, literal=literal)


@lru_cache(maxsize=None)
def catalog() -> tuple[NamedMatrix, ...]:
    """Every displayed matrix at order 60, plus F_2, F_5 and the H_1..H_4 references."""
    M = CATALOG_ORDER
    items = [NamedMatrix("F_2", fourier(2, M), "fourier"),
             NamedMatrix("F_3", from_display("F_3"), "f3"),
             NamedMatrix("F_5", fourier(5, M), "fourier")]
    for k in range(1, 5):
        items.append(NamedMatrix(f"H_{k}", c2_reference(k), "h14"))
    for name, (tag, _rows_) in _DISPLAYS.items():
        if name != "F_3":
            items.append(NamedMatrix(name, from_display(name), tag))
    return tuple(items)


@lru_cache(maxsize=None)
def catalog_dict() -> dict[str, NamedMatrix]:
    return {nm.name: nm for nm in catalog()}


def get(name: str) -> CycloMatrix:
    try:
        return catalog_dict()[name].matrix
    except KeyError:
        raise KeyError(f"unknown matrix {name!r}") from None


def identity(n: int, M: int = CATALOG_ORDER) -> CycloMatrix:
    return CycloMatrix.identity(n, M)


def identical_display_groups() -> list[list[str]]:
    """Groups of catalog names whose matrices are entrywise identical."""
    groups: dict[tuple, list[str]] = {}
    for nm in catalog():
        groups.setdefault(nm.matrix.rows, []).append(nm.name)
    return [g for g in groups.values() if len(g) > 1]
