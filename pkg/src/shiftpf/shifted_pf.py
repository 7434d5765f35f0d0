"""The shifted parking function symmetric function sh_n, computed several ways.

Every route lands in the power-sum basis, where equality is decidable, and
:func:`verify_routes` insists that they all agree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .numbers import catalan, falling, schroeder, step2_product  # noqa: F401
from .partitions import gen_partitions, multinomial, multiplicities, z_stat
from .pring import PPoly, hom_sym, shiftify
from .schur_p import (
    p_exp_to_gamma,
    p_basis_convert,
    principal_spec,
    q_series,
    reduce_to_odd,
    v_to_gamma,
)
from .series import Series, lagrange_coeff


class VerificationError(AssertionError):
    """Two computations that must agree do not; both forms are attached."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


def pf_powersum(n):
    """The parking function symmetric function pf_n in the power-sum basis."""
    if n < 1:
        raise ValueError("n must be positive")
    return PPoly(
        {lam: Fraction((n + 1) ** (len(lam) - 1), z_stat(lam)) for lam in gen_partitions(n)}
    )


def sh_powersum(n):
    """sh_n as a sum over odd-part partitions of 2^len (n+1)^(len-1) p_lambda / z_lambda."""
    if n < 1:
        raise ValueError("n must be positive")
    return PPoly(
        {
            lam: Fraction(2 ** len(lam) * (n + 1) ** (len(lam) - 1), z_stat(lam))
            for lam in gen_partitions(n, "odd")
        }
    )


def sh_lagrange(n):
    """sh_n = [t^n] K(x,t)^(n+1) / (n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (q_series(n) ** (n + 1))[n] / (n + 1)


def shifted_inverse_series(order):
    """t K(x, -t), whose compositional inverse generates the sh_n."""
    return q_series(order).subs_neg().shift_up().truncate(order)


def sh_lagrange_inverse(n):
    """sh_n as coefficient t^(n+1) of the compositional inverse of t K(x,-t)."""
    if n < 1:
        raise ValueError("n must be positive")
    return lagrange_coeff(shifted_inverse_series(n + 1), n)


def sh_easy_v(n):
    """sh_n in the (non-unique) V-monomials over all partitions of n."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for lam in gen_partitions(n):
        ell = len(lam)
        denom = 1
        for m in multiplicities(lam).values():
            denom *= factorial(m)
        out[lam] = Fraction(2**ell * falling(n, ell - 1), denom)
    return out


def sh_main_v(n):
    """sh_n as a polynomial in P_1, P_3, P_5, ... (unique)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for lam in gen_partitions(n, "odd"):
        ell = len(lam)
        c = Fraction(2**ell, factorial(ell))
        c *= multinomial(ell, multiplicities(lam).values())
        c *= step2_product(n + ell - 1, ell - 1)
        out[lam] = c
    return out


def sh_p_expansion(n):
    """sh_n in the P_lambda basis: b_lambda = 2^len P_lambda(1^(n+1)) / (n+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for lam in gen_partitions(n, "distinct"):
        c = Fraction(2 ** len(lam)) * principal_spec(lam, n + 1) / (n + 1)
        if c:
            out[lam] = c
    return out


def taylor_g(k, n):
    """g_k(n) = 2^k (n+k-1)(n+k-3)...(n-k+3), a product of k-1 factors."""
    if k < 1:
        raise ValueError("k must be positive")
    return 2**k * step2_product(n + k - 1, k - 1)


def taylor_series(n, order):
    """(2z + sqrt(1 + 4z^2))^(n+1) over Q."""
    base = Series([0, 2], order) + Series([1, 0, 4], order).sqrt()
    return base ** (n + 1)


def verify_lemma34(max_n, max_k):
    """Check the Taylor coefficients of (2z + sqrt(1+4z^2))^(n+1) against g_k(n).

    Returns a list of ``(n, k, series_coeff, predicted)``; raises on mismatch.
    """
    rows = []
    for n in range(max_n + 1):
        s = taylor_series(n, max_k)
        if s[0] != 1:
            raise VerificationError(f"constant term of power {n + 1} is {s[0]}")
        for k in range(1, max_k + 1):
            predicted = Fraction((n + 1) * taylor_g(k, n), factorial(k))
            if s[k] != predicted:
                raise VerificationError(f"n={n}, k={k}", s[k], predicted)
            rows.append((n, k, s[k], predicted))
    return rows


@dataclass
class ShResult:
    n: int
    gamma: PPoly
    v_odd: dict
    v_any: dict
    p_exp: dict
    provenance: dict = field(default_factory=dict)

    def coefficient_sum(self):
        return sum(self.v_odd.values(), Fraction(0))


ROUTES = {
    "powersum": "power-sum formula over odd partitions",
    "shiftified_pf": "shiftification of pf_n",
    "lagrange_inverse": "Lagrange coefficient of the inverse of t K(x,-t)",
    "lagrange_power": "[t^n] K^(n+1) / (n+1)",
    "easy_v": "V-expansion over all partitions, even P's eliminated",
    "main_v": "odd P-polynomial formula",
    "p_expansion": "P_lambda expansion via principal specialization",
}


def _agree(n, forms):
    (ref_name, ref), *rest = forms.items()
    for name, form in rest:
        if form != ref:
            raise VerificationError(f"sh_{n}: route {name!r} disagrees with {ref_name!r}", ref, form)


def verify_routes(n, include_p_expansion=True):
    """Compute sh_n by every route, reduce to the power-sum basis and compare."""
    v_any = sh_easy_v(n)
    v_odd = sh_main_v(n)
    forms = {
        "powersum": sh_powersum(n),
        "shiftified_pf": shiftify(pf_powersum(n)),
        "lagrange_inverse": sh_lagrange_inverse(n),
        "lagrange_power": sh_lagrange(n),
        "easy_v": v_to_gamma(reduce_to_odd(v_any)),
        "main_v": v_to_gamma(v_odd),
    }
    p_exp = {}
    if include_p_expansion:
        p_exp = sh_p_expansion(n)
        forms["p_expansion"] = p_exp_to_gamma(p_exp)
    _agree(n, forms)
    return ShResult(
        n=n,
        gamma=forms["powersum"],
        v_odd=v_odd,
        v_any=v_any,
        p_exp=p_exp,
        provenance={
            "gamma": "powersum",
            "v_odd": "main_v",
            "v_any": "easy_v",
            "p_exp": "p_expansion" if include_p_expansion else None,
            "checked": sorted(forms),
        },
    )


def schroeder_quadruple(n):
    """The four quantities that should all equal r_n.

    Returns ``(coefficient sum of the odd-P form, coefficient of P_(n),
    2 P_n(1^(n+1)) / (n+1), coefficient from inverting t(1-t)/(1+t))``.
    """
    coeff_sum = sum(sh_main_v(n).values(), Fraction(0))
    b_n = p_basis_convert(sh_powersum(n), n).get((n,), Fraction(0))
    spec = 2 * principal_spec((n,), n + 1) / (n + 1)
    f = Series([0, 1], n + 1) * Series([1, -1], n + 1) / Series([1, 1], n + 1)
    inv = f.comp_inverse()[n + 1]
    return coeff_sum, b_n, spec, inv


def h_series(order):
    """H(x, t) = sum h_n t^n over the full power-sum ring."""
    return Series([hom_sym(k) for k in range(order + 1)], order)


def pf_generating_series(order):
    """sum_{n>=0} pf_n t^{n+1} with pf_0 = 1."""
    return Series([PPoly(), PPoly.const(1)] + [pf_powersum(n) for n in range(1, order)], order)


def sh_generating_series(order):
    """sum_{n>=0} sh_n t^{n+1} with sh_0 = 1."""
    return Series([PPoly(), PPoly.const(1)] + [sh_powersum(n) for n in range(1, order)], order)
