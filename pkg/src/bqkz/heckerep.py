"""Path representation of the Hecke quotient H_N^{(k)}(tau) for min(k, n) <= 2.

The generator e_i acts on a path that is convex at i by the scalar tau; on
any other path it is a 0/1 combination of paths convex at i.  Only those
0/1 entries are stored.  For k = 2 they come from the Temperley-Lieb action
on link patterns; for n = 2 they are transported from the (2, k) case
through the tableau transposition.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import pathspace as ps
from .exactring import RATIONAL, MultiPoly, matmul
from .report import Report

TAU_NAMES = ("tau",)


class UnsupportedParameters(ValueError):
    """Raised for min(k, n) >= 3, where the representation is not constructed."""


class BadTauValue(ValueError):
    pass


@dataclass(frozen=True)
class ReprMatrices:
    k: int
    n: int
    basis: ps.Basis
    # targets[i-1][source] -> tuple of target paths, for sources non-convex at i
    targets: tuple[dict, ...]

    @property
    def N(self) -> int:
        return self.k * self.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_convex(self, path, i: int) -> bool:
        return path[i - 1] < path[i]

    def entries(self, i: int):
        """(source, target) pairs with C_{i, source, target} = 1."""
        for src, tgts in self.targets[i - 1].items():
            for t in tgts:
                yield src, t

    def c_entry(self, i: int, src, tgt) -> int:
        return int(tgt in self.targets[i - 1].get(src, ()))

    def sources_of(self, i: int, tgt) -> list:
        """All pi' with C_{i, pi', tgt} = 1."""
        return [src for src, tgts in self.targets[i - 1].items() if tgt in tgts]

    def matrix(self, i: int, tau, zero=0, one=1) -> list[list]:
        """Dense matrix of e_i with M[target][source] (columns are images)."""
        d = self.dim
        m = [[zero] * d for _ in range(d)]
        idx = self.basis.index
        for p in self.basis.paths:
            col = idx[p]
            if self.is_convex(p, i):
                m[col][col] = tau
            else:
                for t in self.targets[i - 1].get(p, ()):
                    m[idx[t]][col] = one
        return m

    def symbolic_matrix(self, i: int) -> list[list[str]]:
        """Entries '0', '1', 'tau' (for JSON output)."""
        return [["tau" if x == "tau" else str(x) for x in row]
                for row in self.matrix(i, "tau", zero=0, one=1)]

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n,
            "basis": [ps.word_str(p) for p in self.basis.paths],
            "generators": {str(i): self.symbolic_matrix(i) for i in range(1, self.N)},
        }

    def with_flipped_entry(self, i: int, src, tgt) -> "ReprMatrices":
        """Copy with C_{i, src, tgt} toggled (used as a mutation control)."""
        targets = [dict(t) for t in self.targets]
        cur = set(targets[i - 1].get(src, ()))
        cur ^= {tgt}
        targets[i - 1][src] = tuple(sorted(cur, key=self.basis.index.get))
        return ReprMatrices(self.k, self.n, self.basis, tuple(targets))


# -- construction ---------------------------------------------------------------

def _link_pattern(word) -> list[int]:
    partner = [0] * len(word)
    stack = []
    for pos, s in enumerate(word):
        if s == 1:
            stack.append(pos)
        else:
            a = stack.pop()
            partner[a], partner[pos] = pos, a
    return partner


def _from_link_pattern(partner) -> tuple[int, ...]:
    return tuple(1 if partner[p] > p else 2 for p in range(len(partner)))


def _tl_targets(basis: ps.Basis) -> tuple[dict, ...]:
    N = basis.N
    out = []
    for i in range(1, N):
        acts = {}
        for p in basis.paths:
            if p[i - 1] < p[i]:
                continue
            partner = _link_pattern(p)
            a, b = partner[i - 1], partner[i]
            partner = list(partner)
            partner[i - 1], partner[i] = i, i - 1
            partner[a], partner[b] = b, a
            acts[p] = (_from_link_pattern(partner),)
        out.append(acts)
    return tuple(out)


@lru_cache(maxsize=None)
def build(k: int, n: int, size_cap: int = ps.DEFAULT_SIZE_CAP) -> ReprMatrices:
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    if min(k, n) >= 3:
        raise UnsupportedParameters(
            f"(k, n) = ({k}, {n}): the path representation is only built for min(k, n) <= 2")
    basis = ps.enumerate_paths(k, n, size_cap)
    N = k * n
    if k == 1 or n == 1:
        # single path; k = 1 is flat everywhere (e_i = 0), n = 1 convex everywhere (e_i = tau)
        targets = tuple({p: () for p in basis.paths if p[i - 1] >= p[i]} for i in range(1, N))
    elif k == 2:
        targets = _tl_targets(basis)
    else:
        dual_rep = build(2, k, size_cap)
        acts = [dict() for _ in range(N - 1)]
        for i in range(1, N):
            for src2, tgt2 in dual_rep.entries(i):
                src = ps.dual(tgt2, 2)
                tgt = ps.dual(src2, 2)
                acts[i - 1].setdefault(src, []).append(tgt)
        targets = []
        for i in range(1, N):
            d = {}
            for p in basis.paths:
                if p[i - 1] >= p[i]:
                    d[p] = tuple(sorted(acts[i - 1].get(p, ()), key=basis.index.get))
            targets.append(d)
        targets = tuple(targets)
    return ReprMatrices(k, n, basis, targets)


# -- Chebyshev polynomials and symmetrizers -------------------------------------------

class ChebyshevU:
    """Memoized U_m(tau) with U_0 = 1, U_1 = tau, U_{m+1} = tau U_m - U_{m-1}."""

    def __init__(self, tau):
        self.tau = tau
        self._vals = [1, tau]

    def __call__(self, m: int):
        while len(self._vals) <= m:
            self._vals.append(self.tau * self._vals[-1] - self._vals[-2])
        return self._vals[m]

    def mu(self, m: int):
        u = self(m)
        if not u:
            raise BadTauValue(f"U_{m}(tau) = 0 at tau = {self.tau}")
        prev = self(m - 1)
        if isinstance(u, int) and isinstance(prev, int):
            return Fraction(prev, u)
        return prev / u


def _identity(d, one=1, zero=0):
    return [[one if a == b else zero for b in range(d)] for a in range(d)]


def _add(a, b, s=1):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _is_zero(m) -> bool:
    return not any(x for row in m for x in row)


def symmetrizer(mats: list[list[list]], cheb: ChebyshevU):
    """Y_m(e_i, ..., e_{i+m-1}) evaluated on the given matrices."""
    y = mats[0]
    d = len(y)
    for m in range(1, len(mats)):
        mu = cheb.mu(m)
        shifted = _add(mats[m], _identity(d), -mu)
        y = matmul(matmul(y, shifted), y)
    return y


# -- verification ------------------------------------------------------------------

def _tau_poly():
    return MultiPoly.var(RATIONAL, TAU_NAMES, 0)


def _matrices_at(R: ReprMatrices, tau, symbolic: bool):
    if symbolic:
        zero = MultiPoly.zero(RATIONAL, TAU_NAMES)
        one = MultiPoly.one(RATIONAL, TAU_NAMES)
        return [R.matrix(i, tau, zero=zero, one=one) for i in range(1, R.N)]
    return [R.matrix(i, tau) for i in range(1, R.N)]


def _hecke_failures(mats, tau) -> dict[str, list]:
    fails = {"quadratic": [], "commute": [], "braid": []}
    n = len(mats)
    for a in range(n):
        e = mats[a]
        sq = matmul(e, e)
        if not _is_zero(_add(sq, [[tau * x for x in row] for row in e], -1)):
            fails["quadratic"].append(a + 1)
        for b in range(a + 2, n):
            if not _is_zero(_add(matmul(e, mats[b]), matmul(mats[b], e), -1)):
                fails["commute"].append([a + 1, b + 1])
        if a + 1 < n:
            f = mats[a + 1]
            lhs = _add(matmul(matmul(e, f), e), e, -1)
            rhs = _add(matmul(matmul(f, e), f), f, -1)
            if not _is_zero(_add(lhs, rhs, -1)):
                fails["braid"].append(a + 1)
    return fails


def verify_hecke(R: ReprMatrices, tau_values=(Fraction(2), Fraction(7, 3), Fraction(-1)),
                 symbolic: bool | None = None) -> Report:
    """Check e_i^2 = tau e_i, far commutation and the braid-type relation."""
    rep = Report(f"hecke relations ({R.k},{R.n})")
    if symbolic is None:
        symbolic = R.N <= 8
    runs = []
    if symbolic:
        tau = _tau_poly()
        runs.append(("symbolic", tau, _matrices_at(R, tau, True)))
    for t in tau_values:
        t = Fraction(t)
        runs.append((f"tau={t}", t, _matrices_at(R, t, False)))
    for mode, tau, mats in runs:
        fails = _hecke_failures(mats, tau)
        for rel in ("quadratic", "commute", "braid"):
            rep.add(f"{rel} [{mode}]", not fails[rel],
                    mode="symbolic" if mode == "symbolic" else "exact-point",
                    witness=fails[rel] or None)
    return rep


def verify_quotient(R: ReprMatrices, tau_values=(Fraction(3), Fraction(5, 2)),
                    order: int | None = None) -> Report:
    """Y_k(e_i, ..., e_{i+k-1}) = 0 for i = 1..N-k (order overrides k for controls)."""
    m = R.k if order is None else order
    rep = Report(f"quotient relation Y_{m} ({R.k},{R.n})")
    for t in tau_values:
        t = Fraction(t)
        cheb = ChebyshevU(t)
        for j in range(1, R.k + 1):
            if cheb(j) == 0:
                raise BadTauValue(f"U_{j}({t}) = 0")
        mats = _matrices_at(R, t, False)
        bad = []
        for i in range(1, R.N - m + 1):
            y = symmetrizer(mats[i - 1:i - 1 + m], cheb)
            if not _is_zero(y):
                bad.append(i)
        rep.add(f"Y_{m} vanishes [tau={t}]", not bad, mode="exact-point", witness=bad or None)
    return rep


def verify_p_properties(R: ReprMatrices) -> Report:
    rep = Report(f"P1-P4 ({R.k},{R.n})")
    p1, p2, p3, p4 = [], [], [], []
    for i in range(1, R.N):
        acts = R.targets[i - 1]
        for p in R.basis.paths:
            convex = R.is_convex(p, i)
            if convex and p in acts:
                p1.append([i, ps.word_str(p)])
            if not convex and p not in acts:
                p2.append([i, ps.word_str(p)])
        for src, tgts in acts.items():
            if len(set(tgts)) != len(tgts) or any(t not in R.basis.index for t in tgts):
                p2.append([i, ps.word_str(src)])
            for t in tgts:
                if not R.is_convex(t, i):
                    p3.append([i, ps.word_str(src), ps.word_str(t)])
                lozenge = (t[i - 1], t[i]) == (src[i], src[i - 1]) and all(
                    t[m] == src[m] for m in range(R.N) if m not in (i - 1, i))
                if not lozenge and not (t != src and ps.contained_in(t, src, R.k)):
                    p4.append([i, ps.word_str(src), ps.word_str(t)])
    rep.add("P1 convex paths are tau-eigenvectors", not p1, witness=p1 or None)
    rep.add("P2 non-convex images are 0/1 combinations", not p2, witness=p2 or None)
    rep.add("P3 images are convex at i", not p3, witness=p3 or None)
    rep.add("P4 images add the lozenge or lie below", not p4, witness=p4 or None)
    return rep


def verify_duality(Rkn: ReprMatrices, Rnk: ReprMatrices) -> Report:
    """C^{(n)}_{i, dual(pi'), dual(pi)} = C^{(k)}_{i, pi, pi'} for all entries."""
    rep = Report(f"duality ({Rkn.k},{Rkn.n}) <-> ({Rnk.k},{Rnk.n})")
    if (Rkn.k, Rkn.n) != (Rnk.n, Rnk.k):
        raise ValueError("duality needs transposed parameters")
    mapped = set()
    for i in range(1, Rkn.N):
        for src, tgt in Rkn.entries(i):
            mapped.add((i, ps.dual(tgt, Rkn.k), ps.dual(src, Rkn.k)))
    direct = {(i, s, t) for i in range(1, Rnk.N) for s, t in Rnk.entries(i)}
    diff = sorted((i, ps.word_str(s), ps.word_str(t)) for i, s, t in mapped ^ direct)
    rep.add("transported entries coincide", not diff, witness=[list(d) for d in diff] or None)
    return rep


def verify_all(R: ReprMatrices) -> Report:
    rep = Report(f"representation ({R.k},{R.n})")
    rep.extend(verify_hecke(R), "hecke: ")
    rep.extend(verify_quotient(R), "quotient: ")
    rep.extend(verify_p_properties(R), "p-properties: ")
    rep.extend(verify_duality(R, build(R.n, R.k)), "duality: ")
    return rep
