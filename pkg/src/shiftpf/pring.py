"""Exact symmetric functions written in the power-sum basis.

A :class:`PPoly` is a finite map from partitions to nonzero ``Fraction``
coefficients; the key ``(3, 1, 1)`` stands for ``p_3 p_1^2`` and ``()`` for
the constant 1.  Elements of the odd power-sum subalgebra
``Gamma = Q[p_1, p_3, p_5, ...]`` are just PPolys whose keys have odd parts.
"""

from fractions import Fraction
from numbers import Rational

from .partitions import (
    check_partition,
    gen_partitions,
    is_odd,
    normalize,
    sort_key,
    z_stat,
)


class NotHomogeneousError(ValueError):
    pass


class PPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[check_partition(key)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def p(cls, *parts, coeff=1):
        """The power-sum monomial ``coeff * p_{parts}`` (parts in any order)."""
        return cls({normalize(parts): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def coeff(self, parts):
        return self._terms.get(normalize(parts), Fraction(0))

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(k == () for k in self._terms)

    def in_gamma(self):
        return all(is_odd(k) for k in self._terms)

    def degree(self):
        """The common degree of all terms; raises if ``self`` is not homogeneous."""
        degrees = {sum(k) for k in self._terms}
        if len(degrees) > 1:
            raise NotHomogeneousError(f"terms of degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0

    def truncate(self, max_degree):
        return PPoly._raw({k: v for k, v in self._terms.items() if sum(k) <= max_degree})

    # -- ring structure -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, PPoly):
            return other
        if isinstance(other, (int, Rational)):
            return PPoly._raw({(): Fraction(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return PPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return PPoly._raw({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, PPoly):
            return NotImplemented
        out = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = normalize(k1 + k2)
                out[k] = out.get(k, 0) + v1 * v2
        return PPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PPoly):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("can only divide by a nonzero constant")
            other = other.constant_term()
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = PPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse, which exists only for nonzero constants."""
        if not self.is_constant() or self.is_zero():
            raise ZeroDivisionError(f"{self} is not a unit")
        return PPoly.const(1 / self.constant_term())

    def is_unit(self):
        return self.is_constant() and not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "PPoly(0)"
        return "PPoly(" + " + ".join(f"{c}*p{list(k)}" for k, c in self.items()) + ")"


def hom_sym(n):
    """h_n = sum over partitions of n of p_lambda / z_lambda."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PPoly._raw({lam: Fraction(1, z_stat(lam)) for lam in gen_partitions(n)})


def elem_sym(n):
    """e_n = sum over partitions of n of (-1)^(n - len) p_lambda / z_lambda."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PPoly._raw(
        {lam: Fraction((-1) ** (n - len(lam)), z_stat(lam)) for lam in gen_partitions(n)}
    )


def shiftify(f):
    """Substitute p_odd -> 2 p_odd and p_even -> 0.

    The result lies in the odd power-sum subalgebra.
    """
    out = {}
    for k, v in f._terms.items():
        if all(p % 2 for p in k):
            out[k] = v * 2 ** len(k)
    return PPoly._raw(out)


def omega(f):
    """The involution omega: p_lambda -> (-1)^(|lambda| - len) p_lambda."""
    return PPoly._raw({k: v * (-1) ** (sum(k) - len(k)) for k, v in f._terms.items()})


def inner_product(f, g):
    """Hall inner product, for which the p_lambda are orthogonal with norms z_lambda."""
    small, big = (f, g) if len(f._terms) <= len(g._terms) else (g, f)
    return sum(
        (v * big._terms[k] * z_stat(k) for k, v in small._terms.items() if k in big._terms),
        Fraction(0),
    )


def dimension(f, n):
    """<f, p_1^n>, i.e. n! times the coefficient of p_1^n.  ``f`` must be homogeneous."""
    if not f.is_zero() and f.degree() != n:
        raise NotHomogeneousError(f"expected degree {n}, got {f.degree()}")
    return inner_product(f, PPoly.p(*[1] * n))


def eval_ones(f, m):
    """Specialize x_1 = ... = x_m = 1 and all other variables to 0 (so p_k -> m)."""
    m = Fraction(m)
    return sum((v * m ** len(k) for k, v in f._terms.items()), Fraction(0))
