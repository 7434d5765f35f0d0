from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from shiftpf.numbers import catalan_series
from shiftpf.pring import PPoly
from shiftpf.schur_p import q_series
from shiftpf.series import (
    NonUnitError,
    NonZeroConstantError,
    NotNormalizedError,
    Series,
    TruncationError,
    lagrange_coeff,
)
from shiftpf.shifted_pf import shifted_inverse_series, sh_powersum


def S(*cs, order=None):
    return Series(list(cs), order)


def t(order):
    return Series([0, 1], order)


def test_sqrt_binomial():
    # (1+u)^(1/2) with u = 4t^2: 1 + u/2 - u^2/8 + u^3/16
    assert S(1, 0, 4, order=6).sqrt() == S(1, 0, 2, 0, -2, 0, 4)


def test_reciprocal_geometric():
    assert S(1, 1, order=7).reciprocal() == S(*[(-1) ** k for k in range(8)])


def test_exp():
    assert S(0, 2, order=3).exp() == S(1, 2, 2, F(4, 3))


def test_compose_monomial():
    f = S(1, 1, -1)
    g = Series.monomial(2, 4)
    out = f.compose(g)
    assert out.order == 4
    assert out == S(1, 0, 1, 0, -1)


def test_compose_catalan():
    u = Series.monomial(2, 8)
    out = catalan_series(4).compose(u)
    assert out == S(0, 0, 1, 0, -1, 0, 2, 0, -5, order=8)


def test_compose_with_inverse():
    f = S(0, 1, 1, order=8)
    assert f.compose(f.comp_inverse()) == t(8)


def test_inverse_mobius():
    f = t(8) / S(1, 1, order=8)
    assert f.comp_inverse() == S(0, *[1] * 8)


def test_inverse_schroeder():
    f = t(5) * S(1, -1, order=5) / S(1, 1, order=5)
    assert f.comp_inverse() == S(0, 1, 2, 6, 22, 90)


def test_inverse_taylor_pair():
    order = 10
    z = t(order)
    f = z * (z * 2 + S(1, 0, 4, order=order).sqrt())
    g = z / S(1, 4, order=order).sqrt()
    assert f.comp_inverse() == g
    assert f.compose(g) == z
    assert g.compose(f) == z


def test_lagrange_examples():
    f = t(4) * S(1, -1, order=4) / S(1, 1, order=4)
    assert lagrange_coeff(f, 3) == 22
    ident = t(6)
    assert lagrange_coeff(ident, 0) == 1
    assert all(lagrange_coeff(ident, n) == 0 for n in range(1, 6))
    assert lagrange_coeff(shifted_inverse_series(3), 2) == PPoly.p(1, 1, coeff=6) == sh_powersum(2)


def test_errors():
    with pytest.raises(NonUnitError):
        S(0, 1).reciprocal()
    with pytest.raises(NonUnitError):
        S(2, 1).sqrt()
    with pytest.raises(NonZeroConstantError):
        S(1, 1).exp()
    with pytest.raises(NonZeroConstantError):
        S(1, 1).compose(S(1, 1))
    with pytest.raises(NotNormalizedError):
        S(0, 2, 1).comp_inverse()
    with pytest.raises(TruncationError):
        lagrange_coeff(S(0, 1, 1), 5)
    with pytest.raises(TruncationError):
        S(1, 2)[3]
    with pytest.raises(NonUnitError):
        Series([PPoly.p(1), 1]).reciprocal()


def test_mixed_order_truncates():
    a, b = S(1, 1, 1, 1), S(1, 1)
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_k_times_k_neg_is_one():
    k = q_series(24)
    assert k * k.subs_neg() == Series([PPoly.const(1)], 24)


def test_even_part_identity_over_gamma():
    order = 24
    k = q_series(order)
    a = Series([k[j] / 2 if j % 2 else PPoly() for j in range(order + 1)], order)
    b = Series([k[j] / 2 if j and j % 2 == 0 else PPoly() for j in range(order + 1)], order)
    assert b == ((a * a * 4 + 1).sqrt() - 1) / 2


# random normalized series of order <= 12
coeff = st.fractions(min_value=-4, max_value=4, max_denominator=5)
normalized = st.integers(2, 12).flatmap(
    lambda n: st.lists(coeff, min_size=n - 1, max_size=n - 1).map(lambda cs: Series([0, 1] + cs, n))
)
units = st.integers(1, 12).flatmap(
    lambda n: st.lists(coeff, min_size=n, max_size=n).map(lambda cs: Series([1] + cs, n))
)


@settings(max_examples=40, deadline=None)
@given(normalized)
def test_double_inverse(f):
    assert f.comp_inverse().comp_inverse() == f
    assert f.compose(f.comp_inverse()) == t(f.order)


@settings(max_examples=40, deadline=None)
@given(units)
def test_sqrt_and_reciprocal(s):
    r = s.sqrt()
    assert r * r == s
    assert s.reciprocal() * s == Series([1], s.order)


@settings(max_examples=30, deadline=None)
@given(normalized)
def test_lagrange_matches_inverse(f):
    g = f.comp_inverse()
    for n in range(min(f.order, 11)):
        assert lagrange_coeff(f, n) == g[n + 1]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.lists(coeff, min_size=n, max_size=n)))
def test_exp_of_sum_is_product(cs):
    n = len(cs)
    a = Series([0] + cs, n)
    b = Series([0] + cs[::-1], n)
    assert (a + b).exp() == a.exp() * b.exp()
