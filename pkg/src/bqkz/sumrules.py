"""Sum rules at the point q = -exp(i pi/(k+1)).

The positive covector v with v e_i = tau v turns v . Psi into a symmetric
polynomial I(z_1..z_N | r).  This module computes v and I exactly, compares I
with Schur-type closed forms, evaluates the generalized ASM/VSASM numbers and
the stationary-measure observables built from w_pi = (-i/q)^e v_pi Psi_pi.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, lcm

from . import pathspace as ps
from .exactring import (RATIONAL, CycloElem, MultiPoly, PrecisionExhausted, certified_sign,
                        default_names, determinant, embed_numeric, exact_div, nullspace,
                        pfaffian)
from .heckerep import build
from .report import Report


class SumRuleError(ArithmeticError):
    pass


class NonUniqueSolution(SumRuleError):
    pass


class PositivityUncertified(SumRuleError):
    pass


class NonIntegerCoefficient(SumRuleError):
    pass


class DegenerateAlternant(SumRuleError, ZeroDivisionError):
    pass


class DegenerateInput(SumRuleError, ZeroDivisionError):
    pass


# -- the special point ------------------------------------------------------------------

def field_order(k: int) -> int:
    return lcm(4, 2 * (k + 1))


def q_power(k: int) -> int:
    """q = zeta_M^{q_power(k)} = -exp(i pi/(k+1))."""
    M = field_order(k)
    return (k + 2) * M // (2 * (k + 1))


def q_elem(k: int) -> CycloElem:
    return CycloElem.zeta(field_order(k), q_power(k))


def i_elem(k: int) -> CycloElem:
    M = field_order(k)
    return CycloElem.zeta(M, M // 4)


def tau_elem(k: int) -> CycloElem:
    """tau = -(q + 1/q) = 2 cos(pi/(k+1))."""
    q = q_elem(k)
    return -(q + q.inverse())


def prefactor(k: int, n: int) -> CycloElem:
    """(-i/q)^{kn(n-1)/2}."""
    return (-i_elem(k) * q_elem(k).inverse()) ** (k * n * (n - 1) // 2)


# -- covector ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Covector:
    k: int
    n: int
    order: tuple
    entries: dict = field(compare=False)

    def vector(self) -> list[CycloElem]:
        return [self.entries[p] for p in self.order]

    def __getitem__(self, path) -> CycloElem:
        return self.entries[tuple(path)]


def _covector_rows(R, tau):
    M = tau.order
    idx = R.basis.index
    rows = []
    for i in range(1, R.N):
        for src, tgts in R.targets[i - 1].items():
            row = [CycloElem.zero(M)] * len(R.basis)
            row[idx[src]] = tau
            for t in tgts:
                row[idx[t]] = row[idx[t]] - 1
            rows.append(row)
    return rows


def _certify_positive(entries, k, n):
    for p, x in entries.items():
        try:
            s = certified_sign(x)
        except PrecisionExhausted:
            raise PositivityUncertified(f"sign of v at {ps.word_str(p)} undecided") from None
        if s <= 0:
            raise PositivityUncertified(f"v at {ps.word_str(p)} is not positive")


@lru_cache(maxsize=None)
def covector(k: int, n: int, certify: bool = True) -> Covector:
    """Exact left eigenvector of every e_i with eigenvalue tau, v_{pi_f} = 1.

    For a non-convex source pi the equation reads tau v_pi = sum of v over the
    paths that e_i sends pi to; convex sources give tau v_pi = tau v_pi.
    """
    R = build(k, n)
    tau = tau_elem(k)
    rows = _covector_rows(R, tau)
    basis = R.basis
    if not rows:
        sol = [[CycloElem.one(tau.order)] * len(basis)]
    else:
        sol = nullspace(rows, len(basis))
    if len(sol) != 1:
        raise NonUniqueSolution(f"solution space of dimension {len(sol)}")
    vec = sol[0]
    norm = vec[basis.position(basis.pi_f)]
    if not norm:
        raise NonUniqueSolution("v vanishes at pi_f")
    entries = {p: x / norm for p, x in zip(basis.paths, vec)}
    if certify:
        _certify_positive(entries, k, n)
    return Covector(k, n, basis.paths, entries)


def covector_triangular(k: int, n: int) -> Covector:
    """Independent construction: climb from pi_f adding one lozenge at a time.

    If pi is the concave-at-i path pi^- with its lozenge added, the equation
    for the source pi^- at i gives v_pi = tau v_{pi^-} - (other targets).
    Every equation is checked afterwards, which also proves uniqueness.
    """
    R = build(k, n)
    tau = tau_elem(k)
    basis = R.basis
    v = {basis.pi_f: CycloElem.one(tau.order)}
    for p in sorted(basis.paths, key=ps.canonical_sort_key(k, n)):
        if p in v:
            continue
        for i, low in ps.lower_covers(p, k):
            if low not in v:
                continue
            tgts = R.targets[i - 1].get(low, ())
            if p not in tgts or any(t not in v for t in tgts if t != p):
                continue
            val = tau * v[low]
            for t in tgts:
                if t != p:
                    val = val - v[t]
            v[p] = val
            break
        else:
            raise NonUniqueSolution(f"no triangular step reaches {ps.word_str(p)}")
    for i in range(1, R.N):
        for src, tgts in R.targets[i - 1].items():
            acc = CycloElem.zero(tau.order)
            for t in tgts:
                acc = acc + v[t]
            if acc != tau * v[src]:
                raise NonUniqueSolution(f"equation ({i}, {ps.word_str(src)}) violated")
    return Covector(k, n, basis.paths, v)


# -- Young diagrams and Schur functions --------------------------------------------------

def sum_rule_diagram(k: int, n: int) -> tuple[int, ...]:
    """Row lengths l_i = n - 1 - floor((i-1)/k), i = 1..kn."""
    return tuple(n - 1 - (i - 1) // k for i in range(1, k * n + 1))


def conjugate(Y) -> tuple[int, ...]:
    Y = [x for x in Y if x]
    return tuple(sum(1 for x in Y if x > j) for j in range(Y[0] if Y else 0))


def _one_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.one(x.ring, x.names)
    return 1


def _zero_like(x):
    if isinstance(x, MultiPoly):
        return MultiPoly.zero(x.ring, x.names)
    return 0


def elementary(zvals, top: int) -> list:
    """[e_0, ..., e_top] of zvals."""
    one, zero = _one_like(zvals[0]), _zero_like(zvals[0])
    e = [one] + [zero] * top
    for z in zvals:
        for m in range(top, 0, -1):
            e[m] = e[m] + z * e[m - 1]
    return e


def complete(zvals, top: int) -> list:
    """[h_0, ..., h_top] of zvals."""
    one, zero = _one_like(zvals[0]), _zero_like(zvals[0])
    h = [one] + [zero] * top
    for z in zvals:
        for m in range(1, top + 1):
            h[m] = h[m] + z * h[m - 1]
    return h


def schur(Y, zvals, method: str = "bialternant"):
    """s_Y(zvals).  Methods: bialternant (needs distinct values, exact division),
    jacobi_trudi (complete symmetric functions) and dual (elementary ones)."""
    N = len(zvals)
    lam = [x for x in Y if x]
    if len(lam) > N:
        return _zero_like(zvals[0])
    lam = lam + [0] * (N - len(lam))
    if not lam or not any(lam):
        return _one_like(zvals[0])
    if method == "bialternant":
        num = determinant([[z ** (lam[j] + N - 1 - j) for j in range(N)] for z in zvals])
        den = determinant([[z ** (N - 1 - j) for j in range(N)] for z in zvals])
        if not den:
            raise DegenerateAlternant("repeated values in the bialternant")
        if isinstance(num, MultiPoly):
            return exact_div(num, den)
        return Fraction(num) / den
    if method == "jacobi_trudi":
        L = len([x for x in lam if x])
        h = complete(zvals, lam[0] + L)
        zero = _zero_like(zvals[0])
        return determinant([[h[lam[i] - i + j] if lam[i] - i + j >= 0 else zero
                             for j in range(L)] for i in range(L)])
    if method == "dual":
        mu = conjugate(lam)
        L = len(mu)
        e = elementary(zvals, max(mu[0] + L, N))
        zero = _zero_like(zvals[0])

        def ent(i, j):
            m = mu[i] - i + j
            return e[m] if 0 <= m <= N else zero

        return determinant([[ent(i, j) for j in range(L)] for i in range(L)])
    raise ValueError(f"unknown method {method!r}")


def symbolic_schur(Y, N: int, names=None) -> MultiPoly:
    names = names or default_names(N)
    zs = [MultiPoly.var(RATIONAL, names, i) for i in range(N)]
    return schur(Y, zs, method="dual")


def _sp_exponents(Y):
    N = len(Y)
    return [Y[N - j] + j for j in range(1, N + 1)]


def symplectic_schur(Y, zvals, rval, power: int | None = None):
    """(z_1..z_N)^power det(z_i^{e_j} - (r/z_i)^{e_j}) / det(z_i^j - (r/z_i)^j),
    with e_j = l_{N+1-j} + j.

    power defaults to the first row length (n - 1 for the sum-rule diagram),
    which is what makes the ratio agree with I for every n; power = 1 is the
    single-product normalization, which agrees only when n = 2.
    """
    N = len(zvals)
    if len(Y) != N:
        raise ValueError("diagram must be padded to len(zvals) rows")
    power = (Y[0] if Y else 0) if power is None else power
    ex = _sp_exponents(Y)
    zs = [Fraction(z) for z in zvals]
    r = Fraction(rval)
    if any(z == 0 for z in zs):
        raise DegenerateAlternant("zero spectral parameter")
    num = determinant([[z ** e - (r / z) ** e for e in ex] for z in zs])
    den = determinant([[z ** j - (r / z) ** j for j in range(1, N + 1)] for z in zs])
    if not den:
        raise DegenerateAlternant("vanishing denominator alternant")
    prod = Fraction(1)
    for z in zs:
        prod *= z
    return prod ** power * num / den


# -- the k = 2 determinant and Pfaffian ----------------------------------------------

def _ab(x, y, r):
    return (x * x + x * y + y * y) * (r * r + r * x * y + x * x * y * y)


def ik_determinant(zvals, rval):
    """Open Izergin-Korepin formula for k = 2, exact at a rational point."""
    if len(zvals) % 2:
        raise DegenerateInput("needs 2n spectral parameters")
    n = len(zvals) // 2
    zs = [Fraction(z) for z in zvals]
    r = Fraction(rval)
    num = Fraction(1)
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            w = _ab(zs[i], zs[j + n], r)
            if not w:
                raise DegenerateInput("vanishing matrix entry denominator")
            num *= w
            row.append(1 / w)
        mat.append(row)
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= (zs[i] - zs[j]) * (r - zs[i] * zs[j])
            den *= (zs[i + n] - zs[j + n]) * (r - zs[i + n] * zs[j + n])
    if not den:
        raise DegenerateInput("vanishing prefactor denominator")
    return num / den * determinant(mat)


def _pfaffian_sides(zvals, rval):
    zs = [Fraction(z) for z in zvals]
    r = Fraction(rval)
    M = len(zs)
    pref = Fraction(1)
    A = [[Fraction(0)] * M for _ in range(M)]
    for i in range(M):
        for j in range(i + 1, M):
            c = (zs[i] - zs[j]) * (r - zs[i] * zs[j])
            w = _ab(zs[i], zs[j], r)
            if not c or not w:
                raise DegenerateInput("degenerate pair in the Pfaffian formula")
            pref *= w / c
            A[i][j] = c / w
            A[j][i] = -A[i][j]
    return pref, pfaffian(A)


def ik_pfaffian_check(zvals, rval, value=None) -> Report:
    """I^2 = prefactor * Pf at one point; I defaults to the determinant formula."""
    rep = Report("Pfaffian identity")
    I = ik_determinant(zvals, rval) if value is None else Fraction(value)
    pref, pf = _pfaffian_sides(zvals, rval)
    rep.add("I^2 = prefactor * Pf", I * I == pref * pf,
            witness={"I^2": str(I * I), "rhs": str(pref * pf)})
    return rep


# -- generalized ASM numbers ----------------------------------------------------------

def _integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return int(x)


def asm_number(k: int, n: int) -> int:
    if k < 1 or n < 1:
        raise ValueError("k, n >= 1")
    val = Fraction(1)
    for j in range(n):
        num = factorial(j)
        for i in range(1, k):
            num *= factorial((k + 1) * j + i)
        den = 1
        for i in range(k):
            den *= factorial(k * j + i)
        val *= Fraction(num, den)
    return _integer(val, f"A_{n}^({k})")


def vsasm_number(k: int, n: int) -> int:
    if k < 1 or n < 1:
        raise ValueError("k, n >= 1")
    val = Fraction(1)
    for j in range(1, n):
        val *= Fraction(factorial(2 * j) * factorial(2 * n * k + 2 * j - 1),
                        factorial((k + 1) * j) * factorial((k + 1) * (j + n) - 1))
    return _integer(val, f"A_V^({k})({n})")


def asm_classic(n: int) -> int:
    val = Fraction(1)
    for j in range(n):
        val *= Fraction(factorial(3 * j + 1) * factorial(j),
                        factorial(2 * j + 1) * factorial(2 * j))
    return _integer(val, "A_n")


def vsasm_classic(n: int) -> int:
    """A_V(2n+1)."""
    val = Fraction(1)
    for j in range(n):
        val *= Fraction(factorial(6 * j + 4) * factorial(2 * j + 2),
                        factorial(4 * j + 4) * factorial(4 * j + 2))
    return _integer(val, "A_V")


def catalan(k: int) -> int:
    return factorial(2 * k) // (factorial(k) * factorial(k + 1))


def n2_closed_forms(k: int) -> tuple[list[int], int]:
    """Homogeneous I for n = 2 as coefficient list in r, and A_V^{(k)}(2)."""
    coeffs = []
    for m in range(k + 1):
        c = Fraction(k + 1, 2 * k + 1) * comb(2 * k + 1, m) * comb(2 * k + 1, k - m)
        coeffs.append(_integer(c, "coefficient"))
    av = Fraction(2 * factorial(4 * k + 1), factorial(3 * k + 2) * factorial(k + 1))
    return coeffs, _integer(av, "A_V^(k)(2)")


def table_one(k_max: int = 5, n_max: int = 5) -> list[list[int]]:
    """Rows n = 1..n_max, columns k = 1..k_max of A_V^{(k)}(n)."""
    return [[vsasm_number(k, n) for k in range(1, k_max + 1)] for n in range(1, n_max + 1)]


# -- the sum rule ------------------------------------------------------------------------

def format_rpoly(coeffs, var: str = "r") -> str:
    parts = []
    for m, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if m == 0 else (f" {var}" if m == 1 else f" {var}^{m}")
        parts.append(f"{c}{mono}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SumRulePoly:
    k: int
    n: int
    poly: MultiPoly = field(compare=False)

    @property
    def N(self) -> int:
        return self.k * self.n

    @property
    def r_degree(self) -> int:
        return self.k * self.n * (self.n - 1) // 2

    def homogeneous(self) -> list[int]:
        """Coefficients of I(1,..,1 | r), r^0 first."""
        out = [0] * (self.r_degree + 1)
        for e, c in self.poly.terms.items():
            out[e[self.N]] += int(c)
        return out

    def evaluate(self, zvals, rval):
        return self.poly.evaluate(list(zvals) + [rval])


def to_field(poly: MultiPoly, k: int) -> MultiPoly:
    return poly.to_cyclotomic(field_order(k), q_power(k))


def sum_rule(sol, cov: Covector | None = None) -> SumRulePoly:
    """(-i/q)^{kn(n-1)/2} v . Psi at q = -exp(i pi/(k+1)), as an integer polynomial."""
    k, n = sol.k, sol.n
    cov = covector(k, n) if cov is None else cov
    M = field_order(k)
    total = None
    for p in sol.basis.paths:
        term = to_field(sol[p], k).scale(cov[p])
        total = term if total is None else total + term
    total = total.scale(prefactor(k, n))
    out = {}
    for e, c in total.terms.items():
        if not c.is_rational() or c.to_rational().denominator != 1:
            raise NonIntegerCoefficient(f"coefficient {c} at {e} (field order {M})")
        out[e] = c.to_rational()
    return SumRulePoly(k, n, MultiPoly(RATIONAL, total.names, out))


def verify_sum_rule(sr: SumRulePoly) -> Report:
    k, n, N = sr.k, sr.n, sr.N
    f = sr.poly
    rep = Report(f"sum rule ({k},{n})")
    neg = [e for e, c in f.terms.items() if c < 0]
    rep.add("non-negative integer coefficients", not neg, witness=neg[:5] or None)
    asym = [i for i in range(1, N) if f.swap(i - 1, i) != f]
    rep.add("symmetric in all z", not asym, witness=asym or None)
    deg_ok = all(f.degree(i) <= 2 * (n - 1) for i in range(N)) and f.degree(N) == sr.r_degree
    rep.add(f"degree {2 * (n - 1)} in each z, {sr.r_degree} in r", deg_ok)
    w = f.weighted_degrees([1] * N + [2])
    rep.add(f"quasi-homogeneous of weight {3 * k * n * (n - 1) // 2}",
            w <= {3 * k * n * (n - 1) // 2}, witness=sorted(w))
    names = f.names
    bad = []
    for j in range(N):
        lhs = f.subs_monomial({j: (1, {j: -1, N: 1})})
        c = MultiPoly.monomial(RATIONAL, names, {j: -2 * (n - 1), N: n - 1})
        if lhs != c * f:
            bad.append(j + 1)
    rep.add("covariance under z_j -> r/z_j", not bad, witness=bad or None)
    sY = symbolic_schur(sum_rule_diagram(k, n), N, names)
    top = f.coefficient_of(N, sr.r_degree)
    const = f.coefficient_of(N, 0)
    zprod = MultiPoly.monomial(RATIONAL, names, {i: n - 1 for i in range(N)})
    rep.add("top r-coefficient equals s_Y", top == sY)
    rep.add("constant r-coefficient equals (z_1..z_N)^(n-1) s_Y", const == zprod * sY)
    hom = sr.homogeneous()
    rep.add("I(1,..,1|r) is reciprocal", hom == hom[::-1], witness=hom)
    e0 = (k + 1) ** (n * (n - 1) // 2) * asm_number(k, n)
    e1 = (k + 1) ** (n * (n - 1)) * vsasm_number(k, n)
    rep.add("I(1,..,1|0) = (k+1)^{n(n-1)/2} A_n^(k)", hom[0] == e0, witness=[hom[0], e0])
    rep.add("I(1,..,1|1) = (k+1)^{n(n-1)} A_V^(k)(n)", sum(hom) == e1, witness=[sum(hom), e1])
    return rep


# -- multipoint agreement -------------------------------------------------------------

@lru_cache(maxsize=None)
def _sample_space_size(bound: int = 1000) -> int:
    """Distinct positive rationals a/b with 1 <= a, b <= bound."""
    return sum(1 for a in range(1, bound + 1) for b in range(1, bound + 1) if gcd(a, b) == 1)


def _rand_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def line_points(rng: random.Random, N: int, count: int, degenerate, bound: int = 1000):
    """count points z(t) = a + b t, r(t) = c + d t on one random line, t = 1, 2, ...,
    skipping t where degenerate(z, r) is true."""
    a = [_rand_rational(rng, bound) for _ in range(N)]
    b = [_rand_rational(rng, bound) for _ in range(N)]
    c, d = _rand_rational(rng, bound), _rand_rational(rng, bound)
    pts = []
    t = 0
    while len(pts) < count:
        t += 1
        z = [ai + bi * t for ai, bi in zip(a, b)]
        r = c + d * t
        if not degenerate(z, r):
            pts.append((z, r))
    return pts


def _generic(z, r) -> bool:
    """Reject collisions z_i = z_j, z_i z_j = r, z_i^2 = r."""
    N = len(z)
    for i in range(N):
        if z[i] * z[i] == r:
            return True
        for j in range(i + 1, N):
            if z[i] == z[j] or z[i] * z[j] == r:
                return True
    return False


def symplectic_degree_bound(k: int, n: int) -> int:
    N = k * n
    Y = sum_rule_diagram(k, n)
    ex = _sp_exponents(Y)
    emax = max(ex)
    deg_i = 3 * k * n * (n - 1) // 2
    deg_den = N * N + N * (N + 1) // 2
    deg_num = N * emax + sum(ex)
    return max(deg_i + deg_den + N * (emax - N), N * (n - 1) + deg_num)


def ik_degree_bound(n: int) -> int:
    return max(6 * n * (n - 1), 6 * n * n)


def pfaffian_degree_bound(n: int) -> int:
    pairs = n * (2 * n - 1)
    return max(6 * n * (n - 1) + 3 * pairs, 6 * (pairs - n) + 3 * n)


def multipoint_check(sr: SumRulePoly, seed: int = 0, lines: int = 2,
                     min_points: int = 20) -> Report:
    """Compare I with the closed forms on random rational lines.

    On a line, (difference) x (cleared denominators) is a polynomial in t of
    degree at most D, so more than D agreeing points make it vanish on the
    line; a nonzero polynomial vanishes on a random line with probability at
    most D/|S| (S = sampled rationals), which is recorded.
    """
    k, n, N = sr.k, sr.n, sr.N
    rng = random.Random(seed)
    rep = Report(f"multipoint ({k},{n})")
    S = _sample_space_size()
    Y = sum_rule_diagram(k, n)
    checks = [("symplectic Schur", symplectic_degree_bound(k, n))]
    if k == 2:
        checks += [("open IK determinant", ik_degree_bound(n)),
                   ("Pfaffian", pfaffian_degree_bound(n))]
    D = max(d for _, d in checks)
    per_line = max(D + 1, -(-min_points // lines))
    fails: dict[str, list] = {name: [] for name, _ in checks}
    npts = 0
    for _ in range(lines):
        for z, r in line_points(rng, N, per_line, _generic):
            npts += 1
            val = sr.evaluate(z, r)
            if val != symplectic_schur(Y, z, r):
                fails["symplectic Schur"].append([str(x) for x in z] + [str(r)])
            if k == 2:
                if val != ik_determinant(z, r):
                    fails["open IK determinant"].append([str(x) for x in z] + [str(r)])
                if not ik_pfaffian_check(z, r, value=val).ok:
                    fails["Pfaffian"].append([str(x) for x in z] + [str(r)])
    for name, d in checks:
        bad = fails[name]
        rep.add(f"I equals the {name} formula", not bad, mode="multipoint",
                witness=bad[:3] or {"points": npts, "lines": lines, "points_per_line": per_line,
                                    "degree_bound": d, "sample_space": S,
                                    "failure_probability_bound": f"({d}/{S})^{lines}"})
    return rep


# -- w vector and stationary measure ---------------------------------------------------

def w_vector(sol, cov: Covector | None = None) -> dict:
    """w_pi(r) at z = 1, as tuples of field coefficients (r^0 first)."""
    k, n, N = sol.k, sol.n, sol.N
    cov = covector(k, n) if cov is None else cov
    pref = prefactor(k, n)
    M = field_order(k)
    deg = k * n * (n - 1) // 2
    out = {}
    for p in sol.basis.paths:
        f = sol[p].specialize({i: 1 for i in range(N)})
        g = to_field(f, k)
        coeffs = [CycloElem.zero(M)] * (deg + 1)
        for e, c in g.terms.items():
            coeffs[e[N]] = coeffs[e[N]] + c
        out[p] = tuple(c * cov[p] * pref for c in coeffs)
    return out


def w_at(w: dict, rval) -> dict:
    out = {}
    for p, coeffs in w.items():
        acc = coeffs[0] * 0
        for m, c in enumerate(coeffs):
            acc = acc + c * Fraction(rval) ** m
        out[p] = acc
    return out


def stationary_probabilities(sol, cov: Covector | None = None) -> dict:
    w1 = w_at(w_vector(sol, cov), 1)
    total = sum(w1.values(), CycloElem.zero(field_order(sol.k)))
    return {p: x / total for p, x in w1.items()}


def decimal(x: CycloElem, bits: int = 96) -> float:
    return float(embed_numeric(x, bits).midpoint().real)


def conjectured_convex_probability(k: int) -> Fraction:
    return Fraction((k - 1) * (13 * k + 4), 2 * (2 * k - 1) * (4 * k + 1))


@dataclass(frozen=True)
class ConvexTransition:
    k: int
    observable: CycloElem
    conjecture: Fraction
    agrees: bool

    def to_json(self) -> dict:
        obs = (str(self.observable.to_rational()) if self.observable.is_rational()
               else repr(self.observable))
        return {"k": self.k, "observable": obs, "observable_decimal": decimal(self.observable),
                "conjecture": str(self.conjecture), "agrees": self.agrees}


def convex_transition_probability(k: int, sol=None) -> ConvexTransition:
    from .qkzsolver import solve

    sol = solve(k, 2) if sol is None else sol
    if sol.n != 2:
        raise ValueError("the observable is defined for n = 2")
    P = stationary_probabilities(sol)
    obs = CycloElem.zero(field_order(k))
    for p, x in P.items():
        obs = obs + x * Fraction(ps.convex_count(p), 2 * k - 1)
    conj = conjectured_convex_probability(k)
    return ConvexTransition(k, obs, conj, obs == conj)
