"""Catalan and large Schroeder numbers, plus the stepped products used by
the expansion formulas."""

from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .series import Series


def catalan(k):
    if k < 0:
        raise ValueError("k must be nonnegative")
    return comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _schroeder_table(n):
    # (1 - t - sqrt(1 - 6t + t^2)) / 2 = sum r_n t^{n+1}
    radicand = Series([1, -6, 1], n + 1)
    gf = (Series([1, -1], n + 1) - radicand.sqrt()) / 2
    return tuple(int(gf[k + 1]) for k in range(n + 1))


def schroeder(n):
    """Large Schroeder number r_n (1, 2, 6, 22, 90, ...), from its generating function."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _schroeder_table(n)[n]


def catalan_series(order):
    """(-1 + sqrt(1 + 4u)) / 2 = sum_k (-1)^k C_k u^{k+1}, as a series in u."""
    return (Series([1, 4], order).sqrt() - 1) / 2


def step2_product(top, count):
    """top * (top - 2) * ... with ``count`` factors (1 when ``count`` is 0)."""
    return prod(top - 2 * j for j in range(count))


def falling(top, count):
    return prod(top - j for j in range(count))


def as_int(x):
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"{x} is not an integer")
    return x.numerator
