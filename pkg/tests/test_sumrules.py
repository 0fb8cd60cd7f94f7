import itertools
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from bqkz import pathspace as ps
from bqkz import sumrules as sr
from bqkz.exactring import CycloElem

from conftest import solution

rats = st.fractions(min_value=Fraction(1, 7), max_value=7, max_denominator=7)


def ssyt_schur(Y, zvals):
    """Brute force over semistandard fillings (oracle for small shapes)."""
    cells = [(i, j) for i, row in enumerate(Y) for j in range(row)]
    N = len(zvals)
    total = Fraction(0)
    for fill in itertools.product(range(N), repeat=len(cells)):
        T = dict(zip(cells, fill))
        if any(j and T[i, j - 1] > T[i, j] for i, j in cells):
            continue
        if any(i and T[i - 1, j] >= T[i, j] for i, j in cells):
            continue
        term = Fraction(1)
        for v in fill:
            term *= zvals[v]
        total += term
    return total


shapes = st.sampled_from([(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1)])


@given(shapes, st.lists(rats, min_size=3, max_size=3, unique=True))
@settings(max_examples=40)
def test_schur_methods_match_tableau_sum(Y, z):
    ref = ssyt_schur(Y, z)
    for method in ("bialternant", "jacobi_trudi", "dual"):
        assert sr.schur(Y, z, method) == ref


def test_symbolic_schur_evaluates():
    z = [Fraction(2), Fraction(3), Fraction(5)]
    p = sr.symbolic_schur((2, 1), 3, ("z1", "z2", "z3", "r"))
    assert p.evaluate(z + [1]) == ssyt_schur((2, 1), z)


def test_diagram():
    assert sr.sum_rule_diagram(3, 2) == (1, 1, 1, 0, 0, 0)
    assert sr.conjugate((3, 1)) == (2, 1, 1)


# -- covector -------------------------------------------------------------------------

@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
def test_covector_nullspace_equals_triangular(k, n):
    assert sr.covector(k, n).entries == sr.covector_triangular(k, n).entries


def test_three_two_covector():
    v = sr.covector(3, 2)
    sqrt2 = CycloElem.zeta(8, 1) + CycloElem.zeta(8, 7)
    assert v.vector() == [1, sqrt2, 1, 1, sqrt2]


def test_temperley_lieb_covector_is_all_ones():
    assert all(x == 1 for x in sr.covector(2, 3).vector())


# -- numbers -------------------------------------------------------------------------

def test_classic_numbers():
    assert [sr.asm_classic(n) for n in range(1, 7)] == [1, 2, 7, 42, 429, 7436]
    assert [sr.vsasm_classic(n) for n in range(1, 6)] == [1, 3, 26, 646, 45885]
    assert [sr.asm_number(2, n) for n in range(1, 7)] == [sr.asm_classic(n) for n in range(1, 7)]


@pytest.mark.parametrize("k", range(1, 7))
def test_n2_closed_forms(k):
    coeffs, av = sr.n2_closed_forms(k)
    assert av == 2 * factorial(4 * k + 1) // (factorial(3 * k + 2) * factorial(k + 1))
    assert sr.vsasm_number(k, 2) == av
    assert sr.asm_number(k, 2) == sr.catalan(k)
    assert coeffs == coeffs[::-1]
    assert sum(coeffs) == (k + 1) ** 2 * av


def test_format_rpoly():
    assert sr.format_rpoly([20, 84, 84, 20]) == "20 + 84 r + 84 r^2 + 20 r^3"
    assert sr.format_rpoly([0, 1]) == "1 r"
    assert sr.format_rpoly([]) == "0"


# -- sum rules -------------------------------------------------------------------------

HOMOGENEOUS = {
    (2, 1): [1],
    (2, 2): [6, 15, 6],
    (3, 2): [20, 84, 84, 20],
    (2, 3): [189, 1539, 4536, 6426, 4536, 1539, 189],
}


@pytest.mark.parametrize("kn", sorted(HOMOGENEOUS))
def test_homogeneous_sum_rules(kn):
    rule = sr.sum_rule(solution(*kn))
    assert rule.homogeneous() == HOMOGENEOUS[kn]
    rep = sr.verify_sum_rule(rule)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("k", [2, 3, 4])
def test_homogeneous_n2_matches_closed_form(k):
    assert sr.sum_rule(solution(k, 2)).homogeneous() == sr.n2_closed_forms(k)[0]


def test_sum_rule_equals_direct_contraction():
    # I = prefactor * v . Psi, recomputed at one point without the library helper
    k, n = 3, 2
    sol = solution(k, n)
    v = sr.covector(k, n)
    M, qp = sr.field_order(k), sr.q_power(k)
    pt = [Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5), Fraction(7), Fraction(1, 3),
          Fraction(4)]
    q = CycloElem.zeta(M, qp)
    total = CycloElem.zero(M)
    for p in sol.basis.paths:
        total = total + v[p] * sol[p].evaluate(pt, q=q)
    total = total * sr.prefactor(k, n)
    assert total == sr.sum_rule(sol).evaluate(pt[:-1], pt[-1])


@pytest.mark.parametrize("k,n", [(2, 2), (3, 2)])
def test_multipoint_identities(k, n):
    rep = sr.multipoint_check(sr.sum_rule(solution(k, n)))
    assert rep.ok, rep.failures()
    for c in rep.checks:
        w = c.witness
        assert w["points"] >= 20 and w["points_per_line"] > w["degree_bound"]


def test_symplectic_schur_single_product_fails_for_n3():
    # the (z1..zN)^1 normalization is wrong once n > 2
    rule = sr.sum_rule(solution(2, 3))
    z = [Fraction(j + 2, j + 1) for j in range(6)]
    Y = sr.sum_rule_diagram(2, 3)
    assert rule.evaluate(z, 7) == sr.symplectic_schur(Y, z, 7)
    assert rule.evaluate(z, 7) != sr.symplectic_schur(Y, z, 7, power=1)


@given(st.lists(rats, min_size=4, max_size=4, unique=True), rats)
@settings(max_examples=20, deadline=None)
def test_ik_pfaffian_identity(z, r):
    try:
        assert sr.ik_pfaffian_check(z, r).ok
    except sr.DegenerateInput:
        pass


def test_degenerate_inputs():
    with pytest.raises(sr.DegenerateInput):
        sr.ik_determinant([1, 2, 3], 1)
    with pytest.raises(sr.DegenerateAlternant):
        sr.symplectic_schur((1, 0), [1, 1], 2)


def test_degree_bounds_documented():
    assert sr.ik_degree_bound(2) == 24
    assert sr.pfaffian_degree_bound(2) == 30
    assert sr.symplectic_degree_bound(2, 2) == 36


# -- w vector and the interface measure --------------------------------------------------

def test_w_vector_three_two():
    sol = solution(3, 2)
    w = sr.w_vector(sol)
    i = sr.i_elem(3)
    expected = [
        [4, 36, 36, 4],
        [4, 28, 28, 4],
        [4, 4 * (2 + i), 4 * (2 - i), 4],
        [4, 4 * (2 - i), 4 * (2 + i), 4],
        [4, 4, 4, 4],
    ]
    got = [list(w[p]) for p in sol.basis.paths]
    assert got == [[x if isinstance(x, CycloElem) else CycloElem.from_rational(8, x)
                    for x in row] for row in expected]
    assert [sr.w_at(w, 0)[p] for p in sol.basis.paths] == [4] * 5
    assert [sr.w_at(w, 1)[p] for p in sol.basis.paths] == [80, 64, 24, 24, 16]


def test_stationary_three_two():
    P = sr.stationary_probabilities(solution(3, 2))
    assert [P[p] for p in ps.enumerate_paths(3, 2).paths] == [
        Fraction(5, 13), Fraction(4, 13), Fraction(3, 26), Fraction(3, 26), Fraction(1, 13)]


def test_convex_transition_three():
    ct = sr.convex_transition_probability(3, solution(3, 2))
    assert ct.observable == Fraction(43, 65) and ct.agrees


@pytest.mark.parametrize("k", [4, 5])
def test_w_at_r0_integral(k):
    w0 = sr.w_at(sr.w_vector(solution(k, 2)), 0)
    assert all(x.is_rational() and x.to_rational().denominator == 1 for x in w0.values())


def test_n1_symplectic_case_is_one():
    # the sum rule is 1 for n = 1; with power n - 1 = 0 the formula gives 1 as well
    Y = sr.sum_rule_diagram(3, 1)
    assert sr.sum_rule(solution(3, 1)).homogeneous() == [1]
    assert sr.symplectic_schur(Y, [2, 3, 5], 7) == 1
