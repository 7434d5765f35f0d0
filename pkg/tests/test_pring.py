from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from shiftpf.pring import (
    NotHomogeneousError,
    PPoly,
    dimension,
    elem_sym,
    eval_ones,
    hom_sym,
    inner_product,
    omega,
    shiftify,
)
from shiftpf.schur_p import p_function

p = PPoly.p


def newton_h(n, cache={0: PPoly.const(1)}):
    # n h_n = sum_{k=1}^n p_k h_{n-k}
    if n not in cache:
        cache[n] = sum((p(k) * newton_h(n - k) for k in range(1, n + 1)), PPoly()) / n
    return cache[n]


def newton_e(n, cache={0: PPoly.const(1)}):
    # n e_n = sum_{k=1}^n (-1)^(k-1) p_k e_{n-k}
    if n not in cache:
        cache[n] = sum(
            (p(k) * newton_e(n - k) * (-1) ** (k - 1) for k in range(1, n + 1)), PPoly()
        ) / n
    return cache[n]


def test_ring_examples():
    assert p(1) * p(1) == p(1, 1)
    assert (p(1, coeff=2) + p(1, coeff=-2)).terms == {}
    assert p(3) * p(1, 1) == p(3, 1, 1)
    assert p(1) ** 3 == p(1, 1, 1)
    assert p(1) - 1 == -(1 - p(1))


def test_h_e_examples():
    assert hom_sym(2) == PPoly({(1, 1): F(1, 2), (2,): F(1, 2)})
    assert elem_sym(2) == PPoly({(1, 1): F(1, 2), (2,): F(-1, 2)})
    assert hom_sym(0) == 1


@pytest.mark.parametrize("n", range(9))
def test_h_e_match_newton(n):
    assert hom_sym(n) == newton_h(n)
    assert elem_sym(n) == newton_e(n)
    assert omega(hom_sym(n)) == elem_sym(n)


def test_shiftify_examples():
    assert shiftify(p(2)) == 0
    assert shiftify(hom_sym(2)) == p(1, 1, coeff=2)
    assert shiftify(hom_sym(1)) == p(1, coeff=2) == 2 * p_function(1)


@pytest.mark.parametrize("n", range(1, 13))
def test_q_n_three_ways(n):
    # shiftified h_n, sum e_k h_{n-k} taken in the full ring, and 2 P_n
    direct = sum((elem_sym(k) * hom_sym(n - k) for k in range(n + 1)), PPoly())
    assert shiftify(hom_sym(n)) == 2 * p_function(n) == direct


def test_inner_product_examples():
    assert inner_product(p(2, 1), p(2, 1)) == 2
    assert inner_product(p(2), p(1, 1)) == 0
    assert inner_product(p(1, 1, coeff=6), p(1, 1)) == 12


def test_dimension():
    assert dimension(p(1, 1, coeff=6), 2) == 12
    assert dimension(p(3), 3) == 0
    with pytest.raises(NotHomogeneousError):
        dimension(p(1) + p(2), 2)
    with pytest.raises(NotHomogeneousError):
        dimension(p(1, 1), 3)


def test_eval_ones():
    assert eval_ones(p_function(2), 3) == 9
    assert eval_ones(p(3, 1), 1) == 1
    assert eval_ones(p(3, 1) + 7, 0) == 7


# random elements of degree <= 10
partitions_small = st.lists(st.integers(1, 5), min_size=0, max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)
ppolys = st.dictionaries(
    partitions_small, st.fractions(min_value=-5, max_value=5, max_denominator=7), max_size=5
).map(PPoly)


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys)
def test_shiftify_is_a_homomorphism(f, g):
    assert shiftify(f * g) == shiftify(f) * shiftify(g)
    assert shiftify(f + g) == shiftify(f) + shiftify(g)
    assert shiftify(f).in_gamma()


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys, ppolys, st.fractions(max_denominator=5))
def test_inner_product_symmetric_bilinear(f, g, h, c):
    assert inner_product(f, g) == inner_product(g, f)
    assert inner_product(f * c + h, g) == c * inner_product(f, g) + inner_product(h, g)


@settings(max_examples=60, deadline=None)
@given(ppolys, ppolys, st.integers(0, 6))
def test_eval_ones_multiplicative(f, g, m):
    assert eval_ones(f * g, m) == eval_ones(f, m) * eval_ones(g, m)
