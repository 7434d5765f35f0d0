"""Truncated power series in one variable over an exact commutative Q-algebra.

Coefficients are either ``Fraction`` or :class:`~shiftpf.pring.PPoly`; the
code only needs ``+``, ``-``, ``*``, division by a rational and a unit test.
A series of order ``N`` knows its coefficients of ``t^0 .. t^N`` exactly and
nothing beyond.  Binary operations truncate to the smaller order.
"""

from fractions import Fraction
from numbers import Rational

from .pring import PPoly


class SeriesError(ValueError):
    pass


class NonUnitError(SeriesError):
    """The constant term is not invertible (or not 1 where 1 is required)."""


class NonZeroConstantError(SeriesError):
    """A series that must have zero constant term does not."""


class NotNormalizedError(SeriesError):
    """Compositional inversion requires linear coefficient 1."""


class TruncationError(SeriesError):
    """Not enough known coefficients for the requested quantity."""


def _coerce(c):
    if isinstance(c, PPoly):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _is_zero(c):
    return c == 0


def _is_one(c):
    return c == 1


def _inverse(c):
    if isinstance(c, PPoly):
        if not c.is_unit():
            raise NonUnitError(f"constant term {c} is not invertible")
        return c.inverse()
    if c == 0:
        raise NonUnitError("constant term is zero")
    return 1 / c


class Series:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [_coerce(c) for c in coeffs]
        if not coeffs:
            coeffs = [Fraction(0)]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        zero = coeffs[0] * 0
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def monomial(cls, k, order, coeff=1):
        """``coeff * t^k`` known through ``t^order``."""
        coeff = _coerce(coeff)
        return cls([coeff * 0] * k + [coeff], order)

    @property
    def zero(self):
        return self.coeffs[0] * 0

    def __getitem__(self, k):
        if k > self.order:
            raise TruncationError(f"coefficient t^{k} beyond order {self.order}")
        return self.coeffs[k] if k >= 0 else self.zero

    def __len__(self):
        return self.order + 1

    def truncate(self, order):
        return Series(self.coeffs, min(order, self.order))

    def map(self, fn):
        return Series([fn(c) for c in self.coeffs], self.order)

    def valuation(self):
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return None

    def subs_neg(self):
        """t -> -t."""
        return Series([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.order)

    def shift_down(self):
        """Divide by t; the constant term must vanish."""
        if not _is_zero(self.coeffs[0]):
            raise NonZeroConstantError("cannot divide by t")
        if self.order == 0:
            raise TruncationError("no coefficients left after dividing by t")
        return Series(self.coeffs[1:], self.order - 1)

    def shift_up(self):
        """Multiply by t."""
        return Series((self.zero,) + self.coeffs, self.order + 1)

    # -- arithmetic -----------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Rational, PPoly)):
            return Series([_coerce(other)], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, PPoly)):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        nz_a = [i for i in range(n + 1) if not _is_zero(a[i])]
        nz_b = [j for j in range(n + 1) if not _is_zero(b[j])]
        out = [self.zero] * (n + 1)
        for i in nz_a:
            for j in nz_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return Series(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.reciprocal()
        if isinstance(other, (int, Rational)):
            inv = 1 / Fraction(other)
            return Series([c * inv for c in self.coeffs], self.order)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return self.reciprocal() ** (-k)
        result = Series([self.zero + 1], self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self):
        inv0 = _inverse(self.coeffs[0])
        a = self.coeffs
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.zero
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    acc = acc + a[k] * out[n - k]
            out.append(-acc * inv0)
        return Series(out, self.order)

    def sqrt(self):
        """Square root with constant term 1; the input must have constant term 1."""
        a = self.coeffs
        if not _is_one(a[0]):
            raise NonUnitError("sqrt requires constant term 1")
        out = [a[0]]
        for n in range(1, self.order + 1):
            acc = a[n]
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(acc / 2)
        return Series(out, self.order)

    def exp(self):
        """exp of a series with zero constant term, via n e_n = sum k a_k e_{n-k}."""
        a = self.coeffs
        if not _is_zero(a[0]):
            raise NonZeroConstantError("exp requires zero constant term")
        out = [self.zero + 1]
        for n in range(1, self.order + 1):
            acc = self.zero
            for k in range(1, n + 1):
                if not _is_zero(a[k]):
                    acc = acc + a[k] * out[n - k] * k
            out.append(acc / n)
        return Series(out, self.order)

    def derivative(self):
        if self.order == 0:
            raise TruncationError("derivative of an order-0 series is unknown")
        return Series([c * k for k, c in enumerate(self.coeffs)][1:], self.order - 1)

    def compose(self, g):
        """``self(g(t))``; ``g`` must have zero constant term.

        The result order accounts for the valuation of ``g``: if ``g`` starts at
        ``t^v`` then ``self`` truncated at ``N_f`` determines the composite
        through degree ``(N_f + 1) v - 1``.
        """
        if not _is_zero(g.coeffs[0]):
            raise NonZeroConstantError("inner series must have zero constant term")
        v = g.valuation()
        order = g.order if v is None else min(g.order, (self.order + 1) * v - 1)
        g = g.truncate(order)
        result = Series([self.coeffs[-1]], order)
        for c in reversed(self.coeffs[:-1]):
            result = result * g + c
        return result

    def comp_inverse(self):
        """Compositional inverse G with ``self(G(t)) = t``, by Lagrange inversion.

        Coefficient ``t^{n+1}`` of G is ``[t^n] (t/F)^{n+1} / (n+1)``.
        """
        self._check_invertible()
        h = self.shift_down().reciprocal()
        out = [self.zero]
        power = Series([self.zero + 1], h.order)
        for n in range(self.order):
            power = power * h
            out.append(power.coeffs[n] / (n + 1))
        return Series(out, self.order)

    def _check_invertible(self):
        if self.order < 1:
            raise TruncationError("need at least the linear coefficient")
        if not _is_zero(self.coeffs[0]):
            raise NonZeroConstantError("compositional inverse needs zero constant term")
        if not _is_one(self.coeffs[1]):
            raise NotNormalizedError("compositional inverse needs linear coefficient 1")

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs) if not _is_zero(c))
        return f"Series({body or '0'}; O(t^{self.order + 1}))"


def lagrange_coeff(f, n):
    """Coefficient of t^{n+1} in the compositional inverse of ``f``.

    Only ``(t/f)^{n+1}`` up to ``t^n`` is formed; the full inverse is never built.
    """
    f._check_invertible()
    if f.order < n + 1:
        raise TruncationError(f"need order >= {n + 1}, have {f.order}")
    h = f.truncate(n + 1).shift_down().reciprocal()
    return (h ** (n + 1))[n] / (n + 1)
