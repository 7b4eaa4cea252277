"""Exact arithmetic in cyclotomic fields Q(zeta_e).

A value is a coefficient vector over powers of zeta_e.  Two vectors name
the same number iff their remainders modulo the e-th cyclotomic polynomial
agree, so zero testing is a polynomial remainder, never a float compare.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Union

Scalar = Union[int, Fraction]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-to-high, den monic
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, constant term first."""
    if e < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _reduce(coeffs: Iterable[Scalar], e: int) -> tuple[Scalar, ...]:
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, deg - 1, -1):
        a = c[k]
        if a:
            shift = k - deg
            for i in range(deg):
                if phi[i]:
                    c[shift + i] -= a * phi[i]
            c[k] = 0
    out = c[:deg]
    return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x
                 for x in out)


class CyclotomicValue:
    """sum_j coeffs[j] * zeta_e**j with integer (or rational) coefficients."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Union[Mapping[int, Scalar], Iterable[Scalar]] = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        vec: list[Scalar] = [0] * conductor
        if isinstance(coeffs, Mapping):
            for j, a in coeffs.items():
                vec[j % conductor] += a
        else:
            for j, a in enumerate(coeffs):
                vec[j % conductor] += a
        self.coeffs = tuple(vec)

    @classmethod
    def rational(cls, q: Scalar, conductor: int = 1) -> "CyclotomicValue":
        return cls(conductor, {0: q})

    @classmethod
    def root_of_unity(cls, e: int, j: int = 1) -> "CyclotomicValue":
        return cls(e, {j: 1})

    # -- conductor handling ------------------------------------------------
    def lift(self, conductor: int) -> "CyclotomicValue":
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        step = conductor // self.conductor
        return CyclotomicValue(conductor, {j * step: a for j, a in enumerate(self.coeffs) if a})

    def _common(self, other: "CyclotomicValue") -> tuple["CyclotomicValue", "CyclotomicValue"]:
        if self.conductor == other.conductor:
            return self, other
        L = math.lcm(self.conductor, other.conductor)
        return self.lift(L), other.lift(L)

    def _coerce(self, other) -> Optional["CyclotomicValue"]:
        if isinstance(other, CyclotomicValue):
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue.rational(other, self.conductor)
        return None

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicValue(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.conductor, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(self.conductor, [x * other for x in self.coeffs])
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        a, b = self._common(other)
        e = a.conductor
        out: list[Scalar] = [0] * e
        bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in bnz:
                    out[(i + j) % e] += x * y
        return CyclotomicValue(e, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(self.conductor, [Fraction(x) / other for x in self.coeffs])
        return NotImplemented

    def conj(self) -> "CyclotomicValue":
        """Complex conjugate: zeta^j -> zeta^-j."""
        e = self.conductor
        return CyclotomicValue(e, {(-j) % e: a for j, a in enumerate(self.coeffs) if a})

    def galois(self, k: int) -> "CyclotomicValue":
        """Image under zeta -> zeta**k (k coprime to the conductor)."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise ValueError("Galois exponent must be a unit")
        return CyclotomicValue(e, {(j * k) % e: a for j, a in enumerate(self.coeffs) if a})

    # -- canonical form --------------------------------------------------------
    def reduced(self) -> tuple[Scalar, ...]:
        """Coordinates in the power basis 1, zeta, ..., zeta**(phi(e)-1)."""
        return _reduce(self.coeffs, self.conductor)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __bool__(self) -> bool:
        return not self.is_zero()

    def as_rational(self) -> Optional[Fraction]:
        r = self.reduced()
        if any(r[1:]):
            return None
        return Fraction(r[0]) if r else Fraction(0)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # equal values may have different conductors

    def __complex__(self) -> complex:
        e = self.conductor
        return sum(complex(a) * complex(math.cos(2 * math.pi * j / e), math.sin(2 * math.pi * j / e))
                   for j, a in enumerate(self.coeffs) if a) + 0j

    def __repr__(self) -> str:
        terms = [f"{a}*z{self.conductor}^{j}" if j else str(a)
                 for j, a in enumerate(self.reduced()) if a]
        return "Cyc(" + (" + ".join(terms) if terms else "0") + ")"

    def to_json(self) -> dict:
        return {"e": self.conductor,
                "coeffs": {str(j): str(a) for j, a in enumerate(self.reduced()) if a}}


def sqrt_cyclotomic(d: int) -> CyclotomicValue:
    """A square root of the squarefree integer ``d`` inside a cyclotomic field.

    Odd primes use quadratic Gauss sums (sqrt(p*) with p* = +-p, p* = 1 mod 4);
    the leftover units and powers of two use sqrt(-1) = zeta_4 and
    sqrt(2) = zeta_8 + zeta_8**-1.  The root returned for positive ``d`` is
    the positive real one; for negative ``d`` it is i*sqrt(|d|).
    """
    if d == 0:
        return CyclotomicValue.rational(0)
    m = abs(d)
    primes = []
    x, p = m, 2
    while p * p <= x:
        if x % p == 0:
            x //= p
            if x % p == 0:
                raise ValueError(f"{d} is not squarefree")
            primes.append(p)
        p += 1
    if x > 1:
        primes.append(x)
    val = CyclotomicValue.rational(1)
    star = 1
    quarter_turns = 0  # Gauss sums for p = 3 mod 4 equal i*sqrt(p)
    for p in primes:
        if p == 2:
            val = val * CyclotomicValue(8, {1: 1, 7: 1})
            star *= 2
            continue
        gauss = CyclotomicValue(p, {a: (1 if pow(a, (p - 1) // 2, p) == 1 else -1) for a in range(1, p)})
        val = val * gauss
        if p % 4 == 1:
            star *= p
        else:
            star *= -p
            quarter_turns += 1
    if star != d:
        val = val * CyclotomicValue.root_of_unity(4, 1)
        quarter_turns += 1
    if quarter_turns % 4 >= 2:
        val = -val
    return val
