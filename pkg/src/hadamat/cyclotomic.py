"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A :class:`CycloNum` is stored as an integer numerator vector over the power
basis ``1, z, ..., z^(phi(M)-1)`` plus one positive common denominator, always
reduced modulo the M-th cyclotomic polynomial and gcd-normalized, so equality
of values is equality of representations.
"""
from __future__ import annotations

import cmath
import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

MAX_ORDER = 360

Scalar = Union[int, Fraction]


class CyclotomicError(ValueError):
    pass


class UnsupportedOrderError(CyclotomicError):
    pass


class OrderMismatchError(CyclotomicError):
    pass


class NotRepresentableError(CyclotomicError):
    pass


def _check_order(M: int) -> None:
    if not isinstance(M, (int, np.integer)) or M < 1 or M > MAX_ORDER:
        raise UnsupportedOrderError(f"root order must be in 1..{MAX_ORDER}, got {M!r}")


def totient(M: int) -> int:
    result = M
    p, m = 2, M
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients), den monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, d in enumerate(den):
                num[k - dd + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(M: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_M, from x^M - 1 divided by Phi_d for d | M, d < M."""
    _check_order(M)
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def power_table(M: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the reduced coordinates of zeta_M^k, k = 0..M-1."""
    phi_poly = cyclotomic_poly(M)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(M):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi_poly[:deg])]
    return tuple(rows)


@lru_cache(maxsize=None)
def power_table_array(M: int) -> np.ndarray:
    return np.array(power_table(M), dtype=np.int64)


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


def _reduce_long(M: int, poly: Sequence[int]) -> list[int]:
    """Reduce an integer polynomial of any length modulo Phi_M."""
    deg = totient(M)
    table = power_table(M)
    res = list(poly[:deg]) + [0] * max(0, deg - len(poly))
    for k in range(deg, len(poly)):
        c = poly[k]
        if c:
            row = table[k % M]
            for i in range(deg):
                if row[i]:
                    res[i] += c * row[i]
    return res


class CycloNum:
    """An element of Q(zeta_M). Immutable."""

    __slots__ = ("order", "num", "den", "_hash")

    def __init__(self, order: int, coeffs: Iterable[Scalar]):
        _check_order(order)
        coeffs = [Fraction(c) for c in coeffs]
        deg = totient(order)
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        if len(ints) != deg:
            ints = _reduce_long(order, ints)
        self._set(order, *_normalize(ints, den))

    def _set(self, order: int, num: tuple[int, ...], den: int) -> None:
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("CycloNum is immutable")

    @classmethod
    def _raw(cls, order: int, num: Sequence[int], den: int = 1) -> "CycloNum":
        obj = object.__new__(cls)
        obj._set(order, *_normalize(num, den))
        return obj

    # constructors ---------------------------------------------------------

    @classmethod
    def from_int(cls, order: int, value: Scalar) -> "CycloNum":
        _check_order(order)
        value = Fraction(value)
        num = [0] * totient(order)
        num[0] = value.numerator
        return cls._raw(order, num, value.denominator)

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.from_int(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.from_int(order, 1)

    # views ----------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def degree(self) -> int:
        return len(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        M = self.order
        total = 0j
        for k, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(2j * math.pi * k / M)
        return total / self.den

    def __complex__(self) -> complex:
        return self.to_complex()

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"orders {self.order} and {other.order} differ; embed explicitly"
                )
            return other
        if isinstance(other, (int, Fraction, np.integer)):
            return CycloNum.from_int(self.order, int(other) if isinstance(other, np.integer) else other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        num = [a * d2 + b * d1 for a, b in zip(self.num, other.num)]
        return CycloNum._raw(self.order, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.order, [-c for c in self.num], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        deg = len(a)
        prod = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloNum._raw(self.order, _reduce_long(self.order, prod), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> "CycloNum":
        """Apply the automorphism zeta -> zeta^k (k coprime to the order)."""
        M = self.order
        if math.gcd(k, M) != 1:
            raise ValueError(f"{k} is not a unit mod {M}")
        table = power_table(M)
        res = [0] * len(self.num)
        for j, c in enumerate(self.num):
            if c:
                row = table[(j * k) % M]
                for i, r in enumerate(row):
                    if r:
                        res[i] += c * r
        return CycloNum._raw(M, res, self.den)

    def conj(self) -> "CycloNum":
        return self.galois(self.order - 1) if self.order > 2 else self

    def abs2(self) -> "CycloNum":
        return self * self.conj()

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycloNum.from_int(self.order, 1 / self.as_fraction())
        c = self.conj()
        if self * c == 1:
            return c
        # x^-1 = prod_{k != 1} sigma_k(x) / N(x)
        M = self.order
        rest = CycloNum.one(M)
        for k in range(2, M):
            if math.gcd(k, M) == 1:
                rest = rest * self.galois(k)
        norm = (self * rest).as_fraction()
        return rest * CycloNum.from_int(M, 1 / norm)

    def is_unimodular(self) -> bool:
        return self.abs2() == 1

    def embed(self, M2: int) -> "CycloNum":
        return embed(self, M2)

    # comparisons ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self.order == other.order and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction, np.integer)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.order, self.num, self.den)))
        return self._hash

    def __repr__(self) -> str:
        return f"CycloNum({self.order}, {format_entry(self)})"

    def __reduce__(self):
        return (CycloNum, (self.order, self.coeffs))


# module-level operations ----------------------------------------------------


def root_of_unity(M: int, k: int = 1) -> CycloNum:
    _check_order(M)
    return CycloNum._raw(M, power_table(M)[k % M], 1)


def embed(x: CycloNum, M2: int) -> CycloNum:
    _check_order(M2)
    M = x.order
    if M2 % M:
        raise OrderMismatchError(f"order {M} does not divide {M2}")
    if M2 == M:
        return x
    step = M2 // M
    deg2 = totient(M2)
    poly = [0] * (step * (len(x.num) - 1) + 1)
    for j, c in enumerate(x.num):
        poly[j * step] = c
    if len(poly) < deg2:
        poly += [0] * (deg2 - len(poly))
    return CycloNum._raw(M2, _reduce_long(M2, poly), x.den)


def add(x: CycloNum, y: CycloNum) -> CycloNum:
    return x + y


def mul(x: CycloNum, y: CycloNum) -> CycloNum:
    return x * y


def neg(x: CycloNum) -> CycloNum:
    return -x


def conj(x: CycloNum) -> CycloNum:
    return x.conj()


def is_unimodular(x: CycloNum) -> bool:
    return x.is_unimodular()


def to_complex(x: CycloNum) -> complex:
    return x.to_complex()


_SQRT_FORMULAS = {
    # n: (required divisor of M, [(root order, exponent, coefficient), ...])
    2: (8, [(8, 1, 1), (8, 7, 1)]),
    3: (12, [(12, 1, 1), (12, 11, 1)]),
    5: (5, [(5, 0, 1), (5, 1, 2), (5, 4, 2)]),
}


def sqrt_int(n: int, M: int) -> CycloNum:
    """Positive square root of a perfect square or of n in {2, 3, 5} inside Q(zeta_M)."""
    _check_order(M)
    r = math.isqrt(n) if n >= 0 else -1
    if r * r == n:
        return CycloNum.from_int(M, r)
    if n not in _SQRT_FORMULAS:
        raise ValueError(f"sqrt_int supports perfect squares and n in {{2, 3, 5}}, got {n}")
    need, terms = _SQRT_FORMULAS[n]
    if M % need:
        raise NotRepresentableError(
            f"sqrt({n}) needs a root order divisible by {need} (minimal order {need}); got {M}"
        )
    total = CycloNum.zero(M)
    for order, k, c in terms:
        total = total + c * embed(root_of_unity(order, k), M)
    return total


@lru_cache(maxsize=None)
def _embedding_data(M: int):
    units = [k for k in range(1, M) if math.gcd(k, M) == 1] or [1]
    deg = totient(M)
    V = np.array([[cmath.exp(2j * math.pi * j * k / M) for j in range(deg)] for k in units])
    reps = [k for k in units if k <= M - k] if M > 2 else units
    return units, reps, V, np.linalg.inv(V)


def sqrt(x: CycloNum) -> CycloNum | None:
    """An exact square root of x in its own field, or None if none exists there.

    Candidate roots come from the numeric square roots of every Galois conjugate
    (one sign per conjugate pair); after clearing denominators the root is an
    algebraic integer, so its coordinates round to integers and are confirmed
    exactly.
    """
    if x.is_zero():
        return x
    M = x.order
    D = x.den
    X = CycloNum._raw(M, [c * D for c in x.num], 1)  # x * D^2, integral
    units, reps, V, Vinv = _embedding_data(M)
    values = dict(zip(units, V @ np.array(X.num, dtype=float)))
    roots = {k: cmath.sqrt(values[k]) for k in reps}
    for signs in itertools.product((1, -1), repeat=max(0, len(reps) - 1)):
        chosen = {reps[0]: roots[reps[0]]}
        for k, s in zip(reps[1:], signs):
            chosen[k] = s * roots[k]
        w = np.array([chosen[k] if k in chosen else chosen[M - k].conjugate() for k in units])
        coords = Vinv @ w
        rounded = np.rint(coords.real)
        if np.max(np.abs(coords - rounded)) > 1e-6:
            continue
        Y = CycloNum._raw(M, [int(v) for v in rounded], 1)
        if Y * Y == X:
            root = CycloNum._raw(M, Y.num, D)
            z = root.to_complex()
            if z.real < -1e-12 or (abs(z.real) <= 1e-12 and z.imag < 0):
                root = -root
            return root
    return None


# entry syntax ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _root_index(M: int) -> dict[tuple[int, ...], int]:
    return {row: k for k, row in enumerate(power_table(M))}


def root_exponent(x: CycloNum) -> int | None:
    """k with x == zeta_M^k, or None if x is not an M-th root of unity."""
    if x.den != 1:
        return None
    return _root_index(x.order).get(x.num)


def _format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_entry(x: CycloNum) -> str:
    """Canonical text: integer literal, ``zM^k``, or a coefficient list."""
    if x.is_rational() and x.den == 1:
        return str(x.num[0])
    k = root_exponent(x)
    if k is not None:
        return f"z{x.order}^{k}"
    return "[" + ",".join(_format_fraction(c) for c in x.coeffs) + "]"


_ROOT_RE = re.compile(r"^(-?)z(\d+)\^(-?\d+)$")
_INT_RE = re.compile(r"^-?\d+$")


def parse_entry(text: str, M: int) -> CycloNum:
    text = text.strip()
    if _INT_RE.match(text):
        return CycloNum.from_int(M, int(text))
    m = _ROOT_RE.match(text)
    if m:
        sign, order, k = m.group(1), int(m.group(2)), int(m.group(3))
        _check_order(order)
        if M % order:
            raise CyclotomicError(f"z{order} does not live in Q(zeta_{M})")
        value = embed(root_of_unity(order, k), M)
        return -value if sign else value
    if text.startswith("[") and text.endswith("]"):
        parts = [p.strip() for p in text[1:-1].split(",")]
        if len(parts) != totient(M):
            raise CyclotomicError(
                f"coefficient list has {len(parts)} entries, order {M} needs {totient(M)}"
            )
        try:
            coeffs = [Fraction(p) for p in parts]
        except ValueError as exc:
            raise CyclotomicError(f"bad rational in {text!r}") from exc
        return CycloNum(M, coeffs)
    raise CyclotomicError(f"cannot parse entry {text!r}")
