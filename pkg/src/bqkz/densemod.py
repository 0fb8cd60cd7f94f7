"""Dense evaluation of the qKZ solution modulo a prime, for one value of q.

When the symbolic components get too big (the (2,4) system has hundreds of
thousands of z-monomials times a long q-expansion), we fix q and r to
residues mod p and carry each component as a dense array of shape
(2(n-1)+1,)*N.  The triangular solve is the same as the symbolic one; t_i
becomes a fixed linear map on the (z_i, z_{i+1}) exponent plane.

Values of the q-Laurent quantities (sums at z = 1, limits at q = -1) are then
recovered by interpolating over many q.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import pathspace as ps
from .heckerep import build

PRIME = 268435399  # largest prime below 2**28; keeps int64 products safe


def _inv(a: int, p: int) -> int:
    return pow(a % p, p - 2, p)


def _ddiff_matrix(D: int) -> np.ndarray:
    """Matrix of f -> (s_i f - f)/(z_i - z_{i+1}) on the D x D exponent plane."""
    M = np.zeros((D * D, D * D), dtype=np.float64)
    for a in range(D):
        for b in range(D):
            src = a * D + b
            if a > b:
                # (z_i z_j)^b (z_i^{a-b} - z_j^{a-b})/(z_i - z_j), negated
                for s in range(a - b):
                    M[(b + s) * D + (a - 1 - s), src] -= 1
            elif b > a:
                for s in range(b - a):
                    M[(a + s) * D + (b - 1 - s), src] += 1
    return M


class DenseSystem:
    def __init__(self, k: int, n: int, q: int, r: int = 1, p: int = PRIME):
        self.k, self.n, self.p = k, n, p
        self.N = k * n
        self.D = 2 * (n - 1) + 1
        self.q = q % p
        self.qinv = _inv(q, p)
        self.r = r % p
        self.R = build(k, n)
        self._dd = _ddiff_matrix(self.D)

    # -- dense polynomial helpers --------------------------------------------------
    def zeros(self, nvars=None):
        return np.zeros((self.D,) * (nvars or self.N), dtype=np.int64)

    def _shift(self, f, axes_exps):
        """Multiply by the monomial prod z_axis^e (no wrap-around allowed)."""
        out = np.zeros_like(f)
        src = [slice(None)] * f.ndim
        dst = [slice(None)] * f.ndim
        for ax, e in axes_exps.items():
            if e:
                lost = [slice(None)] * f.ndim
                lost[ax] = slice(self.D - e, None)
                if f[tuple(lost)].any():
                    raise OverflowError("degree bound exceeded")
                src[ax] = slice(0, self.D - e)
                dst[ax] = slice(e, None)
        out[tuple(dst)] = f[tuple(src)]
        return out

    def _mul_terms(self, f, terms):
        """f * sum(c * monomial) for terms [(c, {axis: exp})]."""
        out = np.zeros_like(f)
        for c, mono in terms:
            out = (out + (c % self.p) * self._shift(f, mono)) % self.p
        return out

    def base(self) -> np.ndarray:
        p, q, r = self.p, self.q, self.r
        n = self.n
        blocks = []
        for m in range(1, self.k + 1):
            f = np.zeros((self.D,) * n, dtype=np.int64)
            f[(0,) * n] = 1
            for i, j in itertools.combinations(range(n), 2):
                f = self._mul_terms(f, [(q * q, {i: 1}), (-1, {j: 1})])
                f = self._mul_terms(f, [(r * pow(q, 2 * m, p), {}), (-1, {i: 1, j: 1})])
            blocks.append(f)
        out = blocks[0]
        for b in blocks[1:]:
            out = np.multiply.outer(out, b) % p
        return out

    def t_op(self, f, i: int) -> np.ndarray:
        """t_i = (q^{-1} z_{i+1} - q z_i) d_i on a dense array (i is 1-based)."""
        D, p = self.D, self.p
        g = np.moveaxis(f, (i - 1, i), (0, 1))
        shape = g.shape
        g = g.reshape(D * D, -1)
        # entries of the difference matrix are small, so float64 BLAS stays exact
        h = np.rint(self._dd @ g.astype(np.float64)).astype(np.int64) % p
        h = h.reshape(D, D, -1)
        out = np.zeros_like(h)
        if h[:, D - 1].any() or h[D - 1, :].any():
            raise OverflowError("degree bound exceeded")
        out[:, 1:] = (out[:, 1:] + self.qinv * h[:, :-1]) % p
        out[1:, :] = (out[1:, :] - self.q * h[:-1, :]) % p
        return np.moveaxis(out.reshape(shape), (0, 1), (i - 1, i))

    # -- solve and check -----------------------------------------------------------
    def _sources(self):
        out = []
        for i in range(1, self.N):
            inv: dict = {}
            for src, tgt in self.R.entries(i):
                inv.setdefault(tgt, []).append(src)
            out.append(inv)
        return out

    def solve(self) -> dict:
        k, n, p = self.k, self.n, self.p
        basis = self.R.basis
        sources = self._sources()
        comps = {basis.pi_0: self.base()}
        for pth in sorted(basis.paths, key=lambda w: (-ps.rank(w, k, n), w)):
            for i, low in ps.lower_covers(pth, k):
                if low in comps:
                    continue
                val = self.t_op(comps[pth], i)
                for s in sources[i - 1].get(pth, []):
                    if s != low:
                        val = (val - comps[s]) % p
                comps[low] = val
        return comps

    def exchange_failures(self, comps) -> list:
        """Every exchange equation, checked exactly mod p at this q."""
        p = self.p
        sources = self._sources()
        mt = (self.q + self.qinv) % p
        bad = []
        for i in range(1, self.N):
            for pth in self.R.basis.paths:
                lhs = self.t_op(comps[pth], i)
                if pth[i - 1] < pth[i]:
                    rhs = np.zeros_like(lhs)
                    for s in sources[i - 1].get(pth, []):
                        rhs = (rhs + comps[s]) % p
                else:
                    rhs = (mt * comps[pth]) % p
                if not np.array_equal(lhs % p, rhs % p):
                    bad.append([i, ps.word_str(pth)])
        return bad

    def values_at_one(self, comps) -> dict:
        return {pth: int(a.sum() % self.p) for pth, a in comps.items()}


def interpolate(xs, ys, p: int = PRIME) -> list[int]:
    """Coefficients (constant first) of the polynomial through (xs, ys) mod p."""
    n = len(xs)
    coeffs = [0] * n
    for j in range(n):
        # basis polynomial prod_{m != j} (x - x_m) / (x_j - x_m)
        num = [1]
        den = 1
        for m in range(n):
            if m == j:
                continue
            num = [(a - xs[m] * b) % p for a, b in zip([0] + num, num + [0])]
            den = den * (xs[j] - xs[m]) % p
        scale = ys[j] * _inv(den, p) % p
        for t in range(n):
            coeffs[t] = (coeffs[t] + scale * num[t]) % p
    return coeffs


def symmetric_residue(a: int, p: int = PRIME) -> int:
    a %= p
    return a - p if a > p // 2 else a
