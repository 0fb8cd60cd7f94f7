"""The q -> -1 point: integer limit vectors of the homogeneous components and
the determinant they sum to for k = 2."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import densemod as dm
from . import pathspace as ps
from .exactring import determinant, q_limit, vanishing_order_at_minus_one
from .report import Report

__all__ = ["LimitVector", "NonInteger", "homogeneous_limit", "homogeneous_limit_modular",
           "brauer_degree", "limit_sum_check", "divisor_exponent"]


class NonInteger(ArithmeticError):
    pass


@dataclass(frozen=True)
class LimitVector:
    k: int
    n: int
    r_value: int
    divisor_exponent: int
    order: tuple = field(repr=False)
    entries: dict = field(compare=False)
    raw_sign: int = 1
    mode: str = "symbolic"

    def vector(self) -> list[int]:
        return [self.entries[p] for p in self.order]

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "r": self.r_value, "d": self.divisor_exponent,
                "mode": self.mode, "raw_sign": self.raw_sign,
                "basis": [ps.word_str(p) for p in self.order], "entries": self.vector(),
                "sum": self.total}


def divisor_exponent(k: int, n: int, r_value: int) -> int:
    if r_value == 1:
        return k * n * (n - 1)
    if r_value == 0:
        return k * n * (n - 1) // 2
    raise ValueError("r_value must be 0 or 1")


def _normalize(k, n, r_value, d, order, raw, mode):
    sign = -1 if raw[ps.pi_0(k, n)] < 0 else 1
    return LimitVector(k, n, r_value, d, tuple(order), {p: sign * v for p, v in raw.items()},
                       raw_sign=sign, mode=mode)


def homogeneous_limit(sol, r_value: int) -> LimitVector:
    """lim_{q -> -1} Psi_pi(1,..,1 | r_value)/(q^2-1)^d, sign-normalized at pi_0."""
    d = divisor_exponent(sol.k, sol.n, r_value)
    point = [1] * sol.N + [r_value]
    raw = {}
    for p in sol.basis.paths:
        f = sol[p]
        if sol.r_value is not None:
            if r_value != sol.r_value:
                raise ValueError("solution was computed at a different r")
        val = q_limit(f.evaluate(point), d)
        if val.denominator != 1:
            raise NonInteger(f"limit {val} for {ps.word_str(p)}")
        raw[p] = int(val)
    return _normalize(sol.k, sol.n, r_value, d, sol.basis.paths, raw, "symbolic")


def vanishing_orders(sol, r_value: int = 1) -> dict:
    point = [1] * sol.N + [r_value]
    return {p: vanishing_order_at_minus_one(sol[p].evaluate(point)) for p in sol.basis.paths}


def _q_window(k: int, n: int, r_value: int) -> tuple[int, int]:
    """Exponent range containing every q-power of Psi(1,..,1|r_value)."""
    top_rank = ps.rank(ps.pi_0(k, n), k, n)
    pairs = comb(n, 2)
    if r_value:
        base = sum(pairs * (2 + 2 * m) for m in range(1, k + 1))
    else:
        base = 2 * pairs * k
    return -top_rank, base + top_rank


def homogeneous_limit_modular(k: int, n: int, r_value: int = 1, p: int = dm.PRIME,
                              extra: int = 3, progress=None) -> LimitVector:
    """Same limit computed from dense solves mod p at many values of q.

    The q-polynomial of each homogeneous component is interpolated mod p,
    divided by (q+1)^d (divisibility checked mod p) and evaluated at -1.  The
    result is the symmetric residue, exact as long as |entry| < p/2; the
    extra interpolation points must reproduce vanishing top coefficients.
    """
    d = divisor_exponent(k, n, r_value)
    lo, hi = _q_window(k, n, r_value)
    npts = hi - lo + 1 + extra
    xs = list(range(2, 2 + npts))
    vals: dict = {}
    for j, x in enumerate(xs):
        sysm = dm.DenseSystem(k, n, q=x, r=r_value, p=p)
        for path, v in sysm.values_at_one(sysm.solve()).items():
            # multiply by q^{-lo} to get an honest polynomial
            vals.setdefault(path, []).append(v * pow(x, -lo, p) % p)
        if progress:
            progress(j + 1, npts)
    order = ps.enumerate_paths(k, n).paths
    raw = {}
    for path in order:
        coeffs = dm.interpolate(xs, vals[path], p)
        if any(coeffs[hi - lo + 1:]):
            raise ArithmeticError("interpolation window too small")
        coeffs = coeffs[:hi - lo + 1]
        for _ in range(d):
            out = [0] * (len(coeffs) - 1)
            b = 0
            for t in range(len(coeffs) - 1, 0, -1):
                b = (coeffs[t] - b) % p
                out[t - 1] = b
            if (coeffs[0] - b) % p:
                raise ArithmeticError(f"(q+1)^{d} does not divide the {ps.word_str(path)} value")
            coeffs = out
        value = sum(c * (-1) ** t for t, c in enumerate(coeffs)) % p
        value = value * (-1) ** (lo % 2) * pow((-2) ** d % p, p - 2, p) % p
        raw[path] = dm.symmetric_residue(value, p)
    return _normalize(k, n, r_value, d, order, raw, "multipoint")


def brauer_degree(n: int) -> int:
    """det_{0 <= i, j < n} binom(2i + 2j + 1, 2i)."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = [[comb(2 * i + 2 * j + 1, 2 * i) for j in range(n)] for i in range(n)]
    val = determinant(rows)
    return int(val)


def limit_sum_check(k: int, n: int, sol=None, r_value: int = 1) -> Report:
    from .qkzsolver import solve

    rep = Report(f"rational limit ({k},{n}) at r={r_value}")
    sol = solve(k, n) if sol is None else sol
    orders = vanishing_orders(sol, r_value)
    d = divisor_exponent(k, n, r_value)
    low = {ps.word_str(p): o for p, o in orders.items() if o < d}
    rep.add(f"every component vanishes to order >= {d} at q = -1", not low, witness=low or None)
    lv = homogeneous_limit(sol, r_value)
    neg = [ps.word_str(p) for p, v in lv.entries.items() if v < 0]
    rep.add("limit entries are non-negative", not neg, witness=neg or lv.vector())
    if k == 2 and r_value == 1:
        b = brauer_degree(n)
        rep.add(f"sum equals the Brauer degree {b}", lv.total == b,
                witness={"sum": lv.total, "brauer": b})
    else:
        rep.add("sum (regression value)", None, status="recorded",
                witness={"sum": lv.total, "raw_sign": lv.raw_sign})
    return rep
