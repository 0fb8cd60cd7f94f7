import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bqkz import heckerep as hr
from bqkz import pathspace as ps
from bqkz import qkzsolver as qs
from bqkz.exactring import LAURENT_Q, MultiPoly

from conftest import solution

SIZES = [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (4, 2)]

rats = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9)


def pointwise_exchange_ok(sol, R, z, r, q):
    """t_i Psi = (e_i - tau) Psi at one numeric point, with t_i written out from scratch."""
    N = sol.N
    tau = -(q + 1 / q)
    ev = {p: sol[p].evaluate(list(z) + [r], q=q) for p in sol.basis.paths}
    for i in range(1, N):
        zs = list(z)
        zs[i - 1], zs[i] = zs[i], zs[i - 1]
        sw = {p: sol[p].evaluate(zs + [r], q=q) for p in sol.basis.paths}
        for p in sol.basis.paths:
            lhs = (z[i] / q - q * z[i - 1]) * (sw[p] - ev[p]) / (z[i - 1] - z[i])
            if R.is_convex(p, i):
                rhs = sum(ev[s] for s in R.sources_of(i, p))
            else:
                rhs = -tau * ev[p]
            if lhs != rhs:
                return False
    return True


@pytest.mark.parametrize("k,n", [(2, 2), (3, 2), (2, 3)])
@given(data=st.data())
@settings(max_examples=5, deadline=None)
def test_exchange_pointwise_oracle(k, n, data):
    sol = solution(k, n)
    z = data.draw(st.lists(rats, min_size=sol.N, max_size=sol.N, unique=True))
    r, q = data.draw(rats), data.draw(rats.filter(lambda x: x != 1))
    assert pointwise_exchange_ok(sol, hr.build(k, n), z, r, q)


@pytest.mark.parametrize("k,n", [(2, 2), (3, 2), (2, 3)])
@given(data=st.data())
@settings(max_examples=5, deadline=None)
def test_boundary_pointwise_oracle(k, n, data):
    sol = solution(k, n)
    N = sol.N
    z = data.draw(st.lists(rats, min_size=N, max_size=N))
    r, q = data.draw(rats), data.draw(rats)
    for p in sol.basis.paths:
        f = sol[p]
        v = f.evaluate(z + [r], q=q)
        zl = [r / z[0]] + z[1:]
        assert f.evaluate(zl + [r], q=q) == (r / z[0] ** 2) ** (n - 1) * v
        s = r * q ** (2 * (k + 1))
        zr = z[:-1] + [s / z[-1]]
        assert f.evaluate(zr + [r], q=q) == (s / z[-1] ** 2) ** (n - 1) * v


@pytest.mark.parametrize("k,n", SIZES)
def test_verify_all(k, n):
    sol = solution(k, n)
    smaller = solution(k, n - 1) if n > 1 else None
    rep = qs.verify_all(sol, smaller)
    assert rep.ok, rep.failures()


def test_equation_counts_for_three_two():
    sol = solution(3, 2)
    assert qs.verify_exchange(sol).checks[0].witness == {"equations": 25}
    assert qs.verify_wheel(sol).checks[0].witness == {"specializations": 45}


def test_base_component_small():
    # (2,1): pi_0 = 12, no pairs inside a block, so Psi = 1
    assert qs.base_component(2, 1) == MultiPoly.one(LAURENT_Q, ("z1", "z2", "r"))
    f = qs.base_component(1, 2)
    z1, z2, r = [MultiPoly.var(LAURENT_Q, ("z1", "z2", "r"), i) for i in range(3)]
    q = MultiPoly.q(("z1", "z2", "r"))
    assert f == (q * q * z1 - z2) * (r * q * q - z1 * z2)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_solution_independent_of_derivation_order(seed):
    assert qs.solve(3, 2, order_seed=seed) == solution(3, 2)


def test_specialized_r_solve_agrees():
    sol = qs.solve(2, 2, r_value=Fraction(3))
    full = solution(2, 2)
    for p in full.basis.paths:
        assert sol[p] == full[p].specialize({full.N: Fraction(3)})


# -- negative controls ------------------------------------------------------------------

def test_corrupted_component_fails_exchange():
    sol = solution(3, 2)
    p = sol.basis.paths[2]
    bad = sol.with_component(p, sol[p] + MultiPoly.var(LAURENT_Q, sol.names, 0))
    assert not qs.verify_exchange(bad).ok


def test_wrong_boundary_exponent_fails():
    sol = solution(2, 2)
    assert not qs.verify_boundary(sol, exponent=sol.n).ok


def test_wheel_catches_non_vanishing():
    sol = solution(2, 2)
    p = sol.basis.pi_f
    bad = sol.with_component(p, sol[p] + 1)
    assert not qs.verify_wheel(bad).ok


def test_recursion_shape_error():
    with pytest.raises(ValueError):
        qs.verify_recursion(solution(3, 2), solution(2, 2))


def test_specialize_prefix_support():
    red = qs.specialize_prefix(solution(3, 2), 1)
    assert all(p[0] == 1 for p in red.basis.paths)
    with pytest.raises(ValueError):
        qs.specialize_prefix(solution(3, 2), 3)


def test_structure_records_signs():
    rep = qs.verify_structure(solution(2, 3))
    assert rep["components with negative coefficients (flag only)"].status == "recorded"


def test_wheel_tuple_has_k_plus_one_entries():
    for k in range(2, 6):
        for m in range(2, k + 2):
            assert len(qs.wheel_tuple(k, m)) == k + 1


@pytest.mark.slow
def test_five_two_verifies():
    sol = solution(5, 2)
    rep = qs.verify_all(sol, solution(5, 1))
    assert rep.ok, rep.failures()
