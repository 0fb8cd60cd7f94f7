from fractions import Fraction

import numpy as np
import pytest

from bqkz import heckerep as hr
from bqkz import pathspace as ps

SUPPORTED = [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (5, 2)]

# e_1 .. e_5 for (3,2), rows/columns in canonical basis order; T marks tau
T = "tau"
EXPECTED_32 = [
    [[T, 0, 0, 0, 1], [0, T, 1, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, T, 1], [0, 0, 0, 0, 0]],
    [[T, 1, 0, 0, 0], [0, 0, 0, 0, 0], [0, 1, T, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 1, T]],
    [[0, 0, 0, 0, 0], [1, T, 0, 0, 0], [0, 0, T, 0, 1], [0, 0, 0, T, 1], [0, 0, 0, 0, 0]],
    [[T, 1, 0, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0], [0, 1, 0, T, 0], [0, 0, 1, 0, T]],
    [[T, 0, 0, 0, 1], [0, T, 0, 1, 0], [0, 0, T, 0, 1], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]],
]


def test_three_two_matches_reference_matrices():
    R = hr.build(3, 2)
    for i, ref in enumerate(EXPECTED_32, start=1):
        assert R.matrix(i, T) == ref


def _numeric(R, tau):
    return [np.array(R.matrix(i, tau), dtype=float) for i in range(1, R.N)]


@pytest.mark.parametrize("k,n", SUPPORTED)
def test_hecke_relations_numerically(k, n):
    # independent float check at an irrational-looking tau
    tau = 1.37
    R = hr.build(k, n)
    E = _numeric(R, tau)
    for i, e in enumerate(E):
        assert np.allclose(e @ e, tau * e)
        for j in range(i + 2, len(E)):
            assert np.allclose(e @ E[j], E[j] @ e)
        if i + 1 < len(E):
            f = E[i + 1]
            assert np.allclose(e @ f @ e - e, f @ e @ f - f)


@pytest.mark.parametrize("k,n", SUPPORTED)
def test_all_verifiers_pass(k, n):
    rep = hr.verify_all(hr.build(k, n))
    assert rep.ok, rep.failures()


def test_unsupported_parameters():
    with pytest.raises(hr.UnsupportedParameters, match=r"min\(k, n\) <= 2"):
        hr.build(3, 3)


def test_flipped_entry_is_caught():
    R = hr.build(3, 2)
    src, tgt = next(R.entries(2))
    bad = R.with_flipped_entry(2, src, tgt)
    assert not hr.verify_hecke(bad).ok or not hr.verify_p_properties(bad).ok


def test_wrong_quotient_order_is_caught():
    # Y_2 does not vanish in the k = 3 quotient
    assert not hr.verify_quotient(hr.build(3, 2), order=2).ok


def test_bad_tau():
    with pytest.raises(hr.BadTauValue):
        hr.verify_quotient(hr.build(2, 2), tau_values=(Fraction(0),))


def test_chebyshev():
    U = hr.ChebyshevU(Fraction(2))
    assert [U(m) for m in range(5)] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("k,n", [(2, 3), (3, 2), (4, 2)])
def test_duality_transports_entries(k, n):
    assert hr.verify_duality(hr.build(k, n), hr.build(n, k)).ok


def test_json_shape():
    doc = hr.build(2, 2).to_json()
    assert doc["basis"] == [ps.word_str(p) for p in ps.enumerate_paths(2, 2).paths]
    assert set(doc["generators"]) == {"1", "2", "3"}
