from fractions import Fraction as F
from math import comb

import pytest

from shiftpf.numbers import catalan, schroeder
from shiftpf.pring import PPoly, dimension, shiftify
from shiftpf.schur_p import p_basis_convert, principal_spec, v_to_gamma
from shiftpf.series import Series
from shiftpf.shifted_pf import (
    VerificationError,
    _agree,
    pf_powersum,
    schroeder_quadruple,
    sh_easy_v,
    sh_lagrange,
    sh_lagrange_inverse,
    sh_main_v,
    sh_p_expansion,
    sh_powersum,
    taylor_g,
    taylor_series,
    verify_lemma34,
    verify_routes,
)
from shiftpf.suites import suite_genfun

p = PPoly.p

TABLE = {
    1: {(1,): 2},
    2: {(1, 1): 6},
    3: {(1, 1, 1): 20, (3,): 2},
    4: {(1, 1, 1, 1): 70, (3, 1): 20},
    5: {(1,) * 5: 252, (3, 1, 1): 140, (5,): 2},
    6: {(1,) * 6: 924, (3, 1, 1, 1): 840, (5, 1): 28, (3, 3): 14},
}


def test_pf_powersum_examples():
    assert pf_powersum(1) == p(1)
    assert pf_powersum(2) == PPoly({(1, 1): F(3, 2), (2,): F(1, 2)})
    assert pf_powersum(3).coeff((1, 1, 1)) == F(16, 6)


def test_sh_powersum_examples():
    assert sh_powersum(1) == p(1, coeff=2)
    assert sh_powersum(2) == p(1, 1, coeff=6)
    assert sh_powersum(3) == PPoly({(1, 1, 1): F(64, 3), (3,): F(2, 3)})


@pytest.mark.parametrize("n", range(1, 13))
def test_shiftified_pf(n):
    assert shiftify(pf_powersum(n)) == sh_powersum(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_lagrange_routes(n):
    assert sh_lagrange(n) == sh_powersum(n) == sh_lagrange_inverse(n)


def test_easy_v_examples():
    assert sh_easy_v(1) == {(1,): 2}
    assert sh_easy_v(2) == {(2,): 2, (1, 1): 4}
    assert sh_easy_v(3) == {(3,): 2, (2, 1): 12, (1, 1, 1): 8}


@pytest.mark.parametrize("n", sorted(TABLE))
def test_main_v_table(n):
    assert sh_main_v(n) == TABLE[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_central_binomial_corner(n):
    assert sh_main_v(n)[(1,) * n] == comb(2 * n, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_main_v_positive_integers(n):
    assert all(c > 0 and c.denominator == 1 for c in sh_main_v(n).values())


def test_p_expansion_examples():
    assert sh_p_expansion(1) == {(1,): 2}
    assert sh_p_expansion(2) == {(2,): 6}
    assert sh_p_expansion(3)[(3,)] == 22


@pytest.mark.parametrize("n", range(1, 9))
def test_p_expansion_vs_conversion(n):
    assert sh_p_expansion(n) == p_basis_convert(sh_powersum(n), n)


@pytest.mark.parametrize("n", range(1, 11))
def test_dimension_sh(n):
    assert dimension(sh_powersum(n), n) == 2**n * (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_dimension_pf(n):
    assert dimension(pf_powersum(n), n) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_schroeder_quadruple(n):
    assert schroeder_quadruple(n) == (schroeder(n),) * 4


def test_sequences():
    assert [schroeder(n) for n in range(8)] == [1, 2, 6, 22, 90, 394, 1806, 8558]
    assert [catalan(k) for k in range(6)] == [1, 1, 2, 5, 14, 42]
    # table sums
    assert [sum(TABLE[n].values()) for n in sorted(TABLE)] == [schroeder(n) for n in sorted(TABLE)]


def test_taylor_g():
    assert all(taylor_g(1, n) == 2 for n in range(-3, 10))
    assert taylor_g(2, 2) == 12
    # direct expansion of (2z + 1 + 2z^2)^3, exact up to z^3 since sqrt(1+4z^2) = 1 + 2z^2 + O(z^4)
    cube = (Series([1, 2, 2], 3)) ** 3
    assert cube[2] == 18 == taylor_series(2, 3)[2]


def test_verify_lemma34():
    rows = verify_lemma34(10, 10)
    assert len(rows) == 11 * 10
    assert all(a == b for _, _, a, b in rows)


@pytest.mark.parametrize("n", [1, 4, 8, 10])
def test_verify_routes(n):
    res = verify_routes(n)
    assert res.gamma == sh_powersum(n)
    assert v_to_gamma(res.v_odd) == res.gamma
    assert res.coefficient_sum() == schroeder(n)
    assert res.p_exp[(n,)] == schroeder(n)


def test_verify_routes_n4_and_n8():
    assert verify_routes(4).v_odd == TABLE[4]
    assert verify_routes(8).v_odd[(1,) * 8] == 12870


def test_agree_reports_both_forms():
    with pytest.raises(VerificationError) as info:
        _agree(3, {"a": p(1), "b": p(3)})
    assert info.value.left == p(1) and info.value.right == p(3)


def test_generating_functions():
    assert all(c.ok for c in suite_genfun(8))


def test_principal_spec_matches_p_expansion():
    for n in range(1, 7):
        b = sh_p_expansion(n)
        for lam, c in b.items():
            assert c == F(2 ** len(lam)) * principal_spec(lam, n + 1) / (n + 1)
