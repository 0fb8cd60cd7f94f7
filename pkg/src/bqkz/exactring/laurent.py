"""Univariate Laurent polynomials in the formal parameter q."""
from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloElem
from .errors import InexactDivision, InsufficientVanishing


class LaurentQ:
    """Immutable Laurent polynomial sum_e c_e q^e with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = {0: coeffs}
        self.coeffs = {int(e): Fraction(c) for e, c in coeffs.items() if c}

    @classmethod
    def q(cls, power: int = 1) -> "LaurentQ":
        return cls({power: 1})

    @classmethod
    def from_int_list(cls, coeffs, low: int = 0) -> "LaurentQ":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def _lift(self, other) -> "LaurentQ":
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentQ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise InexactDivision("only monomials are invertible")
            (e, c), = self.coeffs.items()
            return LaurentQ({e * n: Fraction(1) / c ** (-n)})
        out = LaurentQ({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"LaurentQ({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def low_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def high_degree(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def evaluate(self, value):
        """Evaluate at a rational or cyclotomic value of q."""
        total = 0
        for e, c in self.coeffs.items():
            total = total + c * value ** e
        return total

    def to_cyclo(self, order: int, q_power: int) -> CycloElem:
        """Image under q -> zeta_order^q_power."""
        acc = CycloElem.zero(order)
        for e, c in self.coeffs.items():
            acc = acc + CycloElem.zeta(order, e * q_power) * c
        return acc

    def poly_part(self) -> tuple[int, list[Fraction]]:
        """(shift, coefficients) with self = q^shift * sum_i coeffs[i] q^i."""
        if not self.coeffs:
            return 0, []
        lo, hi = self.low_degree(), self.high_degree()
        return lo, [self.coeffs.get(e, Fraction(0)) for e in range(lo, hi + 1)]


def _divide_by_q_plus_one(coeffs: list[Fraction]) -> list[Fraction]:
    """Synthetic division by (q + 1); raises InexactDivision on a remainder."""
    if not coeffs:
        return []
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    b = Fraction(0)
    for j in range(n, 0, -1):
        b = coeffs[j] - b
        out[j - 1] = b
    if coeffs[0] - b != 0:
        raise InexactDivision("(q+1) does not divide")
    return out


def vanishing_order_at_minus_one(L: LaurentQ) -> int:
    """Multiplicity of q = -1 as a root of L (infinite for L = 0 is reported as -1)."""
    if L.is_zero():
        return -1
    _, coeffs = L.poly_part()
    order = 0
    while True:
        try:
            coeffs = _divide_by_q_plus_one(coeffs)
        except InexactDivision:
            return order
        order += 1


def q_limit(L: LaurentQ, d: int) -> Fraction:
    """lim_{q -> -1} L / (q^2 - 1)^d.

    Raises InsufficientVanishing when (q + 1)^d does not divide L.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    shift, coeffs = L.poly_part()
    if not coeffs:
        return Fraction(0)
    for _ in range(d):
        try:
            coeffs = _divide_by_q_plus_one(coeffs)
        except InexactDivision:
            raise InsufficientVanishing(f"(q+1)^{d} does not divide {L}") from None
    value = sum(c * (-1) ** i for i, c in enumerate(coeffs))
    # q^shift and (q - 1)^d evaluated at q = -1
    return value * (-1 if shift % 2 else 1) / Fraction(-2) ** d
