from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bqkz import densemod as dm
from bqkz import qkzsolver as qs
from bqkz import rationallimit as rl
from bqkz.exactring import determinant

from conftest import solution

R1 = {(2, 1): [1], (2, 2): [5, 2], (2, 3): [149, 52, 58, 40, 8], (3, 2): [60, 28, 13, 15, 6]}
R0 = {(2, 2): [2, 1], (2, 3): [10, 4, 4, 4, 1], (3, 2): [6, 3, 2, 2, 1]}


@pytest.mark.parametrize("kn", sorted(R1))
def test_limit_at_r1(kn):
    assert rl.homogeneous_limit(solution(*kn), 1).vector() == R1[kn]


@pytest.mark.parametrize("kn", sorted(R0))
def test_limit_at_r0(kn):
    assert rl.homogeneous_limit(solution(*kn), 0).vector() == R0[kn]


def test_sign_normalization_is_reported():
    assert rl.homogeneous_limit(solution(3, 2), 0).raw_sign == -1
    assert rl.homogeneous_limit(solution(3, 2), 1).raw_sign == 1


def test_brauer_degrees():
    assert [rl.brauer_degree(n) for n in range(1, 6)] == [1, 7, 307, 82977, 137460201]
    with pytest.raises(ValueError):
        rl.brauer_degree(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_k2_limit_sums_to_brauer(n):
    rep = rl.limit_sum_check(2, n, solution(2, n))
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("kn,r", [((2, 2), 1), ((2, 3), 1), ((3, 2), 1), ((3, 2), 0),
                                  ((2, 3), 0)])
def test_modular_engine_matches_symbolic(kn, r):
    sym = rl.homogeneous_limit(solution(*kn), r)
    mod = rl.homogeneous_limit_modular(*kn, r_value=r)
    assert mod.vector() == sym.vector() and mod.raw_sign == sym.raw_sign


def test_divisor_exponent():
    assert rl.divisor_exponent(3, 2, 1) == 6 and rl.divisor_exponent(3, 2, 0) == 3
    with pytest.raises(ValueError):
        rl.divisor_exponent(2, 2, 2)


# -- dense modular engine -------------------------------------------------------------

@pytest.mark.parametrize("kn", [(2, 2), (3, 2), (2, 3)])
def test_dense_solution_is_symbolic_mod_p(kn):
    k, n = kn
    q, r, p = 5, 3, dm.PRIME
    sysm = dm.DenseSystem(k, n, q=q, r=r)
    comps = sysm.solve()
    sol = solution(k, n)
    qinv = pow(q, p - 2, p)
    for path in sol.basis.paths:
        ref = np.zeros_like(comps[path])
        for e, c in sol[path].terms.items():
            val = int(c) * pow(r, e[sol.N], p) % p
            qe = e[sol.N + 1]
            val = val * pow(q if qe >= 0 else qinv, abs(qe), p) % p
            idx = tuple(e[:sol.N])
            ref[idx] = (ref[idx] + val) % p
        assert np.array_equal(ref, comps[path])
    assert not sysm.exchange_failures(comps)


def test_dense_exchange_catches_corruption():
    sysm = dm.DenseSystem(2, 2, q=7)
    comps = sysm.solve()
    path = next(iter(comps))
    comps[path] = comps[path].copy()
    comps[path][(0, 0, 0, 0)] += 1
    assert sysm.exchange_failures(comps)


@given(st.lists(st.integers(0, dm.PRIME - 1), min_size=1, max_size=8))
def test_interpolation_roundtrip(coeffs):
    xs = list(range(2, 2 + len(coeffs)))
    ys = [sum(c * pow(x, t, dm.PRIME) for t, c in enumerate(coeffs)) % dm.PRIME for x in xs]
    assert dm.interpolate(xs, ys) == coeffs


def test_symmetric_residue():
    assert dm.symmetric_residue(dm.PRIME - 3) == -3
    assert dm.symmetric_residue(4) == 4


def test_ddiff_matrix_agrees_with_symbolic():
    from bqkz.exactring import RATIONAL, MultiPoly, divided_difference
    D = 3
    M = dm._ddiff_matrix(D)
    names = ("a", "b", "r")
    for a in range(D):
        for b in range(D):
            f = MultiPoly(RATIONAL, names, {(a, b, 0): 1})
            d = divided_difference(f, 1)
            col = M[:, a * D + b]
            dense = {(x // D, x % D, 0): int(v) for x, v in enumerate(col) if v}
            assert d == MultiPoly(RATIONAL, names, dense)


def test_brauer_oracle_is_a_determinant():
    # direct 3x3 computation
    rows = [[1, 1, 1], [3, 10, 21], [5, 35, 126]]
    assert determinant(rows) == rl.brauer_degree(3)
