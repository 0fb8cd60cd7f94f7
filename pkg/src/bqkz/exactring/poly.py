"""Sparse multivariate Laurent polynomials over Q, Q[q, 1/q] or Q(zeta_M).

Polynomials over the Laurent ring in q are stored flat: the q exponent is
kept as one extra trailing slot of every exponent key, so all arithmetic on
them is plain integer-exponent bookkeeping with rational coefficients.  The
coefficient of a z/r monomial is reassembled into a LaurentQ on demand.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .cyclo import CycloElem, _power_table, cyclotomic_poly
from .errors import IndexOutOfRange, InexactDivision, RingMismatch
from .laurent import LaurentQ


@dataclass(frozen=True)
class Ring:
    kind: str
    order: int | None = None

    def __str__(self):
        return f"cyclotomic({self.order})" if self.kind == "cyclotomic" else self.kind

    def to_json(self):
        return {"cyclotomic": self.order} if self.kind == "cyclotomic" else self.kind

    @classmethod
    def from_json(cls, obj) -> "Ring":
        if isinstance(obj, dict):
            return cyclotomic(int(obj["cyclotomic"]))
        if obj == "rational":
            return RATIONAL
        if obj == "laurent_q":
            return LAURENT_Q
        raise ValueError(f"unknown ring {obj!r}")


RATIONAL = Ring("rational")
LAURENT_Q = Ring("laurent_q")


def cyclotomic(order: int) -> Ring:
    return Ring("cyclotomic", order)


def default_names(n_z: int, with_r: bool = True) -> tuple[str, ...]:
    names = tuple(f"z{i}" for i in range(1, n_z + 1))
    return names + ("r",) if with_r else names


def _fraction(c):
    return c if isinstance(c, (int, Fraction)) else Fraction(c)


def _parse_rational(s) -> Fraction:
    return Fraction(s) if isinstance(s, str) else Fraction(s)


def _fmt_rational(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class MultiPoly:
    """Immutable sparse polynomial; exponents may be negative (Laurent use)."""

    __slots__ = ("ring", "names", "terms", "_arrays")

    def __init__(self, ring: Ring, names: Iterable[str], terms: Mapping | None = None,
                 _trusted: bool = False):
        self.ring = ring
        self.names = tuple(names)
        self._arrays = None
        if _trusted:
            self.terms = terms
            return
        width = len(self.names) + (ring.kind == "laurent_q")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != width:
                raise ValueError(f"exponent {e} has wrong length (expected {width})")
            if ring.kind == "cyclotomic":
                c = c if isinstance(c, CycloElem) else CycloElem.from_rational(ring.order, c)
                if c.order != ring.order:
                    raise RingMismatch("coefficient field order mismatch")
            else:
                c = _fraction(c)
            if c:
                clean[e] = clean[e] + c if e in clean else c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # -- constructors -------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def width(self) -> int:
        return len(self.names) + (self.ring.kind == "laurent_q")

    def _new(self, terms: dict) -> "MultiPoly":
        return MultiPoly(self.ring, self.names, terms, _trusted=True)

    @classmethod
    def zero(cls, ring: Ring, names) -> "MultiPoly":
        return cls(ring, names, {}, _trusted=True)

    @classmethod
    def constant(cls, ring: Ring, names, c) -> "MultiPoly":
        names = tuple(names)
        width = len(names) + (ring.kind == "laurent_q")
        return cls(ring, names, {(0,) * width: c})

    @classmethod
    def one(cls, ring: Ring, names) -> "MultiPoly":
        return cls.constant(ring, names, 1)

    @classmethod
    def monomial(cls, ring: Ring, names, exps: Mapping[int, int] | None = None,
                 coeff=1, qexp: int = 0) -> "MultiPoly":
        names = tuple(names)
        key = [0] * (len(names) + (ring.kind == "laurent_q"))
        for v, e in (exps or {}).items():
            key[v] = e
        if qexp:
            if ring.kind != "laurent_q":
                raise RingMismatch("q only exists in the laurent_q ring")
            key[-1] = qexp
        return cls(ring, names, {tuple(key): coeff})

    @classmethod
    def var(cls, ring: Ring, names, index: int) -> "MultiPoly":
        return cls.monomial(ring, names, {index: 1})

    @classmethod
    def q(cls, names, power: int = 1) -> "MultiPoly":
        return cls.monomial(LAURENT_Q, names, qexp=power)

    def gens(self) -> list["MultiPoly"]:
        return [MultiPoly.var(self.ring, self.names, i) for i in range(self.nvars)]

    # -- ring operations -------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.names != other.names:
            raise RingMismatch(f"variables {self.names} vs {other.names}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CycloElem)):
            return MultiPoly.constant(self.ring, self.names, other)
        if isinstance(other, LaurentQ):
            if self.ring.kind != "laurent_q":
                raise RingMismatch("LaurentQ scalar outside the laurent_q ring")
            zero = (0,) * self.nvars
            return MultiPoly(self.ring, self.names, {zero + (e,): c for e, c in other.coeffs.items()})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] - c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = -c
        return self._new(out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        if not c:
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or (
                isinstance(other, CycloElem) and self.ring.kind == "cyclotomic"):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        add = operator.add
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                k = tuple(map(add, e1, e2))
                if k in out:
                    out[k] = out[k] + c1 * c2
                else:
                    out[k] = c1 * c2
        return self._new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise InexactDivision("negative power of a non-monomial")
            (e, c), = self.terms.items()
            inv = (Fraction(1) / c) if not isinstance(c, CycloElem) else c.inverse()
            return self._new({tuple(-x * (-n) for x in e): inv ** (-n)})
        result = MultiPoly.one(self.ring, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.ring == other.ring and self.names == other.names
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, CycloElem, LaurentQ)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.names, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------
    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def min_degree(self, var: int) -> int:
        return min((e[var] for e in self.terms), default=0)

    def total_degree(self) -> int:
        n = self.nvars
        return max((sum(e[:n]) for e in self.terms), default=0)

    def weighted_degrees(self, weights) -> set[int]:
        return {sum(w * x for w, x in zip(weights, e)) for e in self.terms}

    def is_polynomial(self) -> bool:
        n = self.nvars
        return all(min(e[:n], default=0) >= 0 for e in self.terms)

    def coefficients(self) -> list:
        """Coefficients grouped by z/r monomial (LaurentQ for the laurent_q ring)."""
        return [c for _, c in self.items()]

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        """(exponent, coefficient) pairs in canonical graded-lex order."""
        if self.ring.kind == "laurent_q":
            n = self.nvars
            grouped: dict = {}
            for e, c in self.terms.items():
                grouped.setdefault(e[:n], {})[e[n]] = c
            pairs = [(e, LaurentQ(d)) for e, d in grouped.items()]
        else:
            pairs = list(self.terms.items())
        pairs.sort(key=lambda p: (-sum(p[0]), tuple(-x for x in p[0])))
        return pairs

    def coefficient(self, exps: tuple[int, ...]):
        for e, c in self.items():
            if e == tuple(exps):
                return c
        return LaurentQ() if self.ring.kind == "laurent_q" else 0

    def coefficient_of(self, var: int, power: int) -> "MultiPoly":
        """Coefficient of names[var]**power, as a polynomial not involving that variable."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == power:
                k = list(e)
                k[var] = 0
                out[tuple(k)] = c
        return self._new(out)

    # -- variable operations ------------------------------------------------
    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange variables i and j (0-based)."""
        out = {}
        for e, c in self.terms.items():
            k = list(e)
            k[i], k[j] = k[j], k[i]
            out[tuple(k)] = c
        return self._new(out)

    def subs_monomial(self, mapping: Mapping[int, tuple]) -> "MultiPoly":
        """Substitute variables by monomials.

        mapping[v] = (coeff, {var: exponent}, qexp): names[v] is replaced by
        coeff * prod(var**exponent) * q**qexp.  Coefficients must be invertible
        when they are raised to negative powers.
        """
        width = self.width
        plan = []
        for v, spec in mapping.items():
            coeff, exps, qexp = spec if len(spec) == 3 else (*spec, 0)
            vec = [0] * width
            for u, x in exps.items():
                vec[u] += x
            if qexp:
                if self.ring.kind != "laurent_q":
                    raise RingMismatch("q substitution outside the laurent_q ring")
                vec[-1] += qexp
            plan.append((v, coeff, vec))
        out: dict = {}
        for e, c in self.terms.items():
            k = list(e)
            for v, coeff, vec in plan:
                p = e[v]
                if p:
                    k[v] -= p
                    for t, x in enumerate(vec):
                        if x:
                            k[t] += x * p
                    if coeff != 1:
                        c = c * (_pow(coeff, p))
            kt = tuple(k)
            if kt in out:
                out[kt] = out[kt] + c
            else:
                out[kt] = c
        return self._new({e: c for e, c in out.items() if c})

    def _integer_arrays(self):
        """(exponents, coefficients) as int64 arrays, or False when the
        coefficients are not small integers."""
        if self._arrays is None:
            cs = list(self.terms.values())
            ok = (self.ring.kind != "cyclotomic"
                  and all(c.denominator == 1 for c in cs)
                  and sum(abs(c) for c in cs) < 2 ** 62)
            if ok and cs:
                self._arrays = (np.array(list(self.terms), dtype=np.int64),
                                np.array([int(c) for c in cs], dtype=np.int64))
            else:
                self._arrays = False
        return self._arrays

    def vanishes_under(self, mapping: Mapping[int, tuple]) -> bool:
        """Same as not self.subs_monomial(mapping), vectorized when possible."""
        arrays = self._integer_arrays() if self.terms else False
        if not arrays or any((spec[0] if isinstance(spec, tuple) else 1) != 1
                             for spec in mapping.values()):
            return not self.subs_monomial(mapping)
        E, C = arrays
        A = np.eye(self.width, dtype=np.int64)
        for v, spec in mapping.items():
            _, exps, qexp = spec if len(spec) == 3 else (*spec, 0)
            A[v, v] = 0
            for u, x in exps.items():
                A[v, u] += x
            if qexp:
                A[v, -1] += qexp
        K = E @ A
        lo = K.min(axis=0)
        span = K.max(axis=0) - lo + 1
        if float(np.prod(span.astype(float))) < 2.0 ** 62:
            radix = np.cumprod(np.concatenate(([1], span[:-1])))
            keys = (K - lo) @ radix
        else:
            _, keys = np.unique(K, axis=0, return_inverse=True)
            keys = keys.ravel()
        order = np.argsort(keys, kind="stable")
        ks = keys[order]
        starts = np.flatnonzero(np.concatenate(([True], ks[1:] != ks[:-1])))
        return not np.add.reduceat(C[order], starts).any()

    def set_zero(self, var: int) -> "MultiPoly":
        """Substitute names[var] = 0 (requires no negative powers of it)."""
        if self.min_degree(var) < 0:
            raise InexactDivision(f"{self.names[var]} occurs with a negative power")
        return self._new({e: c for e, c in self.terms.items() if e[var] == 0})

    def specialize(self, values: Mapping[int, object]) -> "MultiPoly":
        """Substitute rational (or field) values for some variables; keeps the variable list."""
        mapping = {v: (val, {}, 0) for v, val in values.items()}
        return self.subs_monomial(mapping)

    def drop_vars(self, drop: Iterable[int]) -> "MultiPoly":
        """Remove variables that no longer occur (their exponents must all be 0)."""
        drop = sorted(set(drop))
        keep = [i for i in range(self.width) if i not in drop]
        for e in self.terms:
            if any(e[v] for v in drop):
                raise ValueError("cannot drop a variable that still occurs")
        names = tuple(self.names[i] for i in range(self.nvars) if i not in drop)
        out = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return MultiPoly(self.ring, names, out, _trusted=True)

    def rename(self, names: Iterable[str]) -> "MultiPoly":
        names = tuple(names)
        if len(names) != self.nvars:
            raise ValueError("rename must keep the number of variables")
        return MultiPoly(self.ring, names, self.terms, _trusted=True)

    def embed_vars(self, names: Iterable[str], positions: list[int]) -> "MultiPoly":
        """Move variable j to slot positions[j] of a larger variable list."""
        names = tuple(names)
        width = len(names) + (self.ring.kind == "laurent_q")
        out = {}
        for e, c in self.terms.items():
            k = [0] * width
            for j, p in enumerate(positions):
                k[p] = e[j]
            if self.ring.kind == "laurent_q":
                k[-1] = e[-1]
            out[tuple(k)] = c
        return MultiPoly(self.ring, names, out, _trusted=True)

    # -- evaluation and ring maps ---------------------------------------------
    def evaluate(self, values, q=None):
        """Evaluate all variables.  Over laurent_q the result is a LaurentQ,
        or a scalar if a value for q is supplied."""
        n = self.nvars
        cache: dict = {}

        def power(i, p):
            key = (i, p)
            if key not in cache:
                cache[key] = _pow(values[i], p)
            return cache[key]

        if self.ring.kind == "laurent_q" and q is None:
            acc: dict[int, object] = {}
            for e, c in self.terms.items():
                v = c
                for i in range(n):
                    if e[i]:
                        v = v * power(i, e[i])
                acc[e[n]] = acc.get(e[n], 0) + v
            return LaurentQ(acc)
        total = 0
        for e, c in self.terms.items():
            v = c
            for i in range(n):
                if e[i]:
                    v = v * power(i, e[i])
            if self.ring.kind == "laurent_q" and e[n]:
                v = v * _pow(q, e[n])
            total = total + v
        return total

    def to_cyclotomic(self, order: int, q_power: int) -> "MultiPoly":
        """Image of a laurent_q polynomial under q -> zeta_order^q_power."""
        if self.ring.kind != "laurent_q":
            raise RingMismatch("to_cyclotomic needs a laurent_q polynomial")
        n = self.nvars
        table = _power_table(order)
        deg = len(cyclotomic_poly(order)) - 1
        acc: dict = {}
        for e, c in self.terms.items():
            row = table[(e[n] * q_power) % order]
            vec = acc.setdefault(e[:n], [0] * deg)
            for t, x in enumerate(row):
                if x:
                    vec[t] += c * x
        out = {}
        for e, vec in acc.items():
            elem = CycloElem(order, vec)
            if elem:
                out[e] = elem
        return MultiPoly(cyclotomic(order), self.names, out, _trusted=True)

    def to_rational(self) -> "MultiPoly":
        """Drop to the rational ring (cyclotomic coefficients must be rational)."""
        if self.ring.kind == "rational":
            return self
        if self.ring.kind == "cyclotomic":
            out = {}
            for e, c in self.terms.items():
                if not c.is_rational():
                    raise ValueError(f"coefficient {c} of {e} is not rational")
                out[e] = c.coords[0]
            return MultiPoly(RATIONAL, self.names, out, _trusted=True)
        n = self.nvars
        if any(e[n] for e in self.terms):
            raise ValueError("polynomial still depends on q")
        return MultiPoly(RATIONAL, self.names, {e[:n]: c for e, c in self.terms.items()},
                         _trusted=True)

    def to_laurent_q(self) -> "MultiPoly":
        if self.ring.kind == "laurent_q":
            return self
        if self.ring.kind != "rational":
            raise RingMismatch("only rational polynomials embed into laurent_q")
        return MultiPoly(LAURENT_Q, self.names, {e + (0,): c for e, c in self.terms.items()},
                         _trusted=True)

    def map_coefficients(self, fn) -> "MultiPoly":
        return self._new({e: fn(c) for e, c in self.terms.items() if fn(c)})

    # -- division -----------------------------------------------------------
    def exact_div(self, other) -> "MultiPoly":
        return exact_div(self, other)

    # -- output ---------------------------------------------------------------
    def __repr__(self):
        return f"MultiPoly<{self.ring}>({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(self.names, e) if x)
            cs = f"({c})" if not isinstance(c, (int, Fraction)) else str(c)
            parts.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return " + ".join(parts)

    def to_json(self) -> dict:
        terms = []
        for e, c in self.items():
            if self.ring.kind == "rational":
                enc = _fmt_rational(c)
            elif self.ring.kind == "laurent_q":
                enc = {str(k): _fmt_rational(v) for k, v in sorted(c.coeffs.items())}
            else:
                enc = [_fmt_rational(v) for v in c.coords]
            terms.append({"e": list(e), "c": enc})
        return {"ring": self.ring.to_json(), "vars": list(self.names), "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "MultiPoly":
        ring = Ring.from_json(obj["ring"])
        names = tuple(obj["vars"])
        out = {}
        for t in obj["terms"]:
            e = tuple(int(x) for x in t["e"])
            if len(e) != len(names):
                raise ValueError("exponent length does not match the variable list")
            c = t["c"]
            if ring.kind == "rational":
                out[e] = _parse_rational(c)
            elif ring.kind == "laurent_q":
                for k, v in c.items():
                    out[e + (int(k),)] = _parse_rational(v)
            else:
                out[e] = CycloElem(ring.order, [_parse_rational(v) for v in c])
        return cls(ring, names, out)


def _pow(x, p: int):
    if p >= 0:
        return x ** p
    if isinstance(x, int):
        return Fraction(1, x ** (-p))
    return (1 / x) ** (-p) if not isinstance(x, CycloElem) else x.inverse() ** (-p)


def _cdiv(a, b):
    if isinstance(a, CycloElem) or isinstance(b, CycloElem):
        return a / b
    return Fraction(a) / b


# -- module-level operations -----------------------------------------------------

def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "exact_div":
        return exact_div(a, b)
    raise ValueError(f"unknown operation {op!r}")


def _monomial_content(terms) -> tuple[int, ...]:
    it = iter(terms)
    lo = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < lo[i]:
                lo[i] = x
    return tuple(lo)


def exact_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact quotient a / b in the Laurent polynomial ring; InexactDivision otherwise."""
    if not isinstance(b, MultiPoly):
        b = a._lift(b)
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    # strip monomial content so both sides are honest polynomials
    ca = _monomial_content(a.terms)
    cb = _monomial_content(b.terms)
    rem = {tuple(x - y for x, y in zip(e, ca)): c for e, c in a.terms.items()}
    div = {tuple(x - y for x, y in zip(e, cb)): c for e, c in b.terms.items()}
    lead = max(div)
    lead_c = div[lead]
    quot: dict = {}
    while rem:
        top = max(rem)
        shift = tuple(x - y for x, y in zip(top, lead))
        if min(shift) < 0:
            raise InexactDivision("divisor does not divide the dividend")
        coef = _cdiv(rem[top], lead_c)
        quot[shift] = coef
        for e, c in div.items():
            k = tuple(x + y for x, y in zip(e, shift))
            v = rem.get(k, 0) - coef * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    offset = tuple(x - y for x, y in zip(ca, cb))
    return a._new({tuple(x + y for x, y in zip(e, offset)): c for e, c in quot.items()})


def _check_index(f: MultiPoly, i: int, n_z: int | None = None):
    n_z = f.nvars - 1 if n_z is None else n_z
    if not 1 <= i <= n_z - 1:
        raise IndexOutOfRange(f"index {i} outside 1..{n_z - 1}")


def swap_vars(f: MultiPoly, i: int, n_z: int | None = None) -> MultiPoly:
    """Exchange z_i and z_{i+1} (1-based)."""
    _check_index(f, i, n_z)
    return f.swap(i - 1, i)


def divided_difference(f: MultiPoly, i: int, n_z: int | None = None) -> MultiPoly:
    """(swap_i f - f) / (z_i - z_{i+1}), computed monomial by monomial.

    For z_i^a z_{i+1}^b with a > b the quotient is
    -(z_i z_{i+1})^b h_{a-b-1}(z_i, z_{i+1}), and symmetrically for a < b.
    """
    _check_index(f, i, n_z)
    ia, ib = i - 1, i
    out: dict = {}
    for e, c in f.terms.items():
        a, b = e[ia], e[ib]
        if a == b:
            continue
        if a > b:
            lo, d, s = b, a - b, -c
        else:
            lo, d, s = a, b - a, c
        k = list(e)
        for j in range(d):
            k[ia] = lo + j
            k[ib] = lo + d - 1 - j
            kt = tuple(k)
            if kt in out:
                out[kt] = out[kt] + s
            else:
                out[kt] = s
    return f._new({e: c for e, c in out.items() if c})


def t_operator(f: MultiPoly, i: int, n_z: int | None = None) -> MultiPoly:
    """(q^{-1} z_{i+1} - q z_i) * divided_difference(f, i)."""
    if f.ring.kind != "laurent_q":
        raise RingMismatch("t_operator needs coefficients carrying q")
    d = divided_difference(f, i, n_z)
    ia, ib = i - 1, i
    out: dict = {}
    for e, c in d.terms.items():
        k = list(e)
        k[ib] += 1
        k[-1] -= 1
        kt = tuple(k)
        out[kt] = out[kt] + c if kt in out else c
        k = list(e)
        k[ia] += 1
        k[-1] += 1
        kt = tuple(k)
        out[kt] = out[kt] - c if kt in out else -c
    return f._new({e: c for e, c in out.items() if c})
