"""Elements of the cyclotomic field Q(zeta_M) in the power basis.

An element is stored as its coordinates on 1, zeta, ..., zeta^(phi(M)-1),
i.e. as a polynomial in zeta reduced modulo the M-th cyclotomic polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .errors import PrecisionExhausted, RingMismatch

DEFAULT_MAX_PRECISION = 4096


def euler_phi(m: int) -> int:
    return sum(1 for j in range(1, m + 1) if math.gcd(j, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    # x^m - 1 divided by Phi_d for every proper divisor d of m
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


def _int_poly_divexact(a: list[int], b: tuple[int, ...]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        quot[i - db] = c
        if c:
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    assert not any(a[:db]), "cyclotomic division must be exact"
    return quot


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of zeta^j for 0 <= j < max(m, 2*phi(m))."""
    phi_poly = cyclotomic_poly(m)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(max(m, 2 * deg)):
        rows.append(tuple(cur))
        # multiply by zeta and reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi_poly[j]
    return tuple(rows)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class CycloElem:
    """Immutable element of Q(zeta_M)."""

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords):
        coords = tuple(_as_fraction(c) for c in coords)
        deg = len(cyclotomic_poly(order)) - 1
        if len(coords) > deg:
            coords = _reduce(order, coords)
        elif len(coords) < deg:
            coords = coords + (Fraction(0),) * (deg - len(coords))
        self.order = order
        self.coords = coords

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "CycloElem":
        return cls(order, ())

    @classmethod
    def one(cls, order: int) -> "CycloElem":
        return cls(order, (1,))

    @classmethod
    def from_rational(cls, order: int, c) -> "CycloElem":
        return cls(order, (c,))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycloElem":
        row = _power_table(order)[power % order]
        return cls(order, row)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise RingMismatch(f"Q(zeta_{self.order}) vs Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.order, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.order, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.order, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        deg = len(self.coords)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.order, [a / other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloElem.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, j: int) -> "CycloElem":
        """Image under the automorphism zeta -> zeta^j (gcd(j, M) = 1)."""
        if math.gcd(j, self.order) != 1:
            raise ValueError("not an automorphism")
        acc = [Fraction(0)] * len(self.coords)
        table = _power_table(self.order)
        for i, a in enumerate(self.coords):
            if a:
                for t, v in enumerate(table[(i * j) % self.order]):
                    if v:
                        acc[t] += a * v
        return CycloElem(self.order, acc)

    def conjugate(self) -> "CycloElem":
        return self.galois(-1 % self.order)

    def norm(self) -> Fraction:
        prod = CycloElem.one(self.order)
        for j in range(1, self.order):
            if math.gcd(j, self.order) == 1:
                prod = prod * self.galois(j)
        assert prod.is_rational()
        return prod.coords[0]

    def inverse(self) -> "CycloElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # x^{-1} = (product of the other Galois conjugates) / N(x)
        others = CycloElem.one(self.order)
        for j in range(2, self.order):
            if math.gcd(j, self.order) == 1:
                others = others * self.galois(j)
        norm = (others * self).coords[0]
        return others / norm

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.order, self.coords))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloElem({self.order}, {[str(c) for c in self.coords]})"

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coords):
            if c:
                mono = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts) if parts else "0"

    # -- numerics -------------------------------------------------------
    def embed(self, precision_bits: int = 64) -> "ComplexInterval":
        return embed_numeric(self, precision_bits)

    def sign(self, max_precision: int = DEFAULT_MAX_PRECISION) -> int:
        return certified_sign(self, max_precision=max_precision)


def _reduce(order: int, coeffs) -> tuple[Fraction, ...]:
    table = _power_table(order)
    deg = len(cyclotomic_poly(order)) - 1
    acc = [Fraction(0)] * deg
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if i < deg:
            acc[i] += c
        else:
            row = table[i] if i < len(table) else table[i % order]
            for t, v in enumerate(row):
                if v:
                    acc[t] += c * v
    return tuple(acc)


@dataclass(frozen=True)
class ComplexInterval:
    real: object  # mpmath interval
    imag: object
    precision_bits: int

    def contains(self, z: complex) -> bool:
        return z.real in self.real and z.imag in self.imag

    def midpoint(self) -> complex:
        return complex(float(self.real.mid), float(self.imag.mid))


def embed_numeric(x: CycloElem, precision_bits: int = 64) -> ComplexInterval:
    """Certified enclosure of the image of x under zeta_M -> exp(2 pi i / M)."""
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    iv = mpmath.iv
    old = iv.prec
    try:
        iv.prec = precision_bits
        re = iv.mpf(0)
        im = iv.mpf(0)
        for j, c in enumerate(x.coords):
            if not c:
                continue
            angle = 2 * iv.pi * j / x.order
            coef = iv.mpf(c.numerator) / c.denominator
            re += coef * iv.cos(angle)
            im += coef * iv.sin(angle)
        return ComplexInterval(re, im, precision_bits)
    finally:
        iv.prec = old


def certified_sign(x: CycloElem, start_bits: int = 64,
                   max_precision: int = DEFAULT_MAX_PRECISION) -> int:
    """Sign of a real cyclotomic number, certified by interval arithmetic.

    Raises ValueError if x is not exactly real, PrecisionExhausted if the
    enclosure still straddles zero at max_precision.
    """
    if not x.is_real():
        raise ValueError("sign requested for a non-real cyclotomic number")
    if x.is_zero():
        return 0
    bits = start_bits
    while bits <= max_precision:
        box = embed_numeric(x, bits)
        if box.real.a > 0:
            return 1
        if box.real.b < 0:
            return -1
        bits *= 2
    raise PrecisionExhausted(f"could not separate {x!r} from 0 with {max_precision} bits")
