"""Verification suites: each checks one family of identities up to a bound.

A suite is a function ``suite(max_n) -> list[Check]``.  Suites never raise on
a failed identity; they record it, with the disagreeing values, in the
returned checks.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

from .nspf import (
    count_fixed_all,
    nspf_count,
    partition_into_blocks,
    serious_spf_numerology,
    total_fixed_predicted,
)
from .numbers import catalan, catalan_series, schroeder
from .partitions import gen_partitions
from .pring import PPoly, dimension, omega
from .schur_p import (
    even_p_elimination,
    p_basis_convert,
    p_function,
    p_lambda,
    principal_spec,
    q_series,
    v_to_gamma,
)
from .series import Series
from .shifted_pf import (
    VerificationError,
    h_series,
    pf_generating_series,
    pf_powersum,
    schroeder_quadruple,
    sh_generating_series,
    sh_main_v,
    sh_p_expansion,
    sh_powersum,
    shifted_inverse_series,
    verify_lemma34,
    verify_routes,
)


@dataclass
class Check:
    suite: str
    identity: str
    n: int
    ok: bool
    detail: str = ""

    def as_dict(self):
        return asdict(self)


def _check(suite, identity, n, left, right):
    ok = left == right
    detail = "" if ok else f"{left!r} != {right!r}"
    return Check(suite, identity, n, ok, detail)


def _guard(suite, identity, n, fn):
    try:
        fn()
    except VerificationError as exc:
        return Check(suite, identity, n, False, f"{exc}: {exc.left!r} vs {exc.right!r}")
    return Check(suite, identity, n, True)


def suite_routes(max_n):
    return [
        _guard("routes", "all routes to sh_n agree in the power-sum basis", n,
               lambda n=n: verify_routes(n, include_p_expansion=n <= 10))
        for n in range(1, max_n + 1)
    ]


def suite_dim(max_n):
    out = []
    for n in range(1, max_n + 1):
        out.append(_check("dim", "dim sh_n = 2^n (n+1)^(n-1)", n,
                          dimension(sh_powersum(n), n), 2**n * (n + 1) ** (n - 1)))
    for n in range(1, min(max_n, 8) + 1):
        out.append(_check("dim", "dim pf_n = (n+1)^(n-1)", n,
                          dimension(pf_powersum(n), n), (n + 1) ** (n - 1)))
    return out


def suite_schroeder(max_n):
    out = []
    for n in range(1, max_n + 1):
        quad = schroeder_quadruple(n)
        out.append(_check("schroeder", "coefficient sum = b_n = 2P_n(1^(n+1))/(n+1) = inverse coeff = r_n",
                          n, quad, (schroeder(n),) * 4))
    return out


def suite_lemma31(max_n):
    order = max_n
    k = q_series(order)
    odd = Series([k[j] / 2 if j % 2 else PPoly() for j in range(order + 1)], order)
    even = Series([k[j] / 2 if j % 2 == 0 and j else PPoly() for j in range(order + 1)], order)
    rhs = ((odd * odd * 4 + 1).sqrt() - 1) / 2
    return [
        _check("lemma31", "even P series = (-1 + sqrt(1 + 4A^2))/2", order, even, rhs),
        _check("lemma31", "K(x,t) K(x,-t) = 1", order, k * k.subs_neg(), Series([PPoly.const(1)], order)),
    ]


def suite_catalan(max_n):
    out = []
    cs = catalan_series(max_n)
    out.append(_check("catalan", "(-1+sqrt(1+4u))/2 = sum (-1)^k C_k u^(k+1)", max_n,
                      [cs[k + 1] for k in range(max_n)],
                      [(-1) ** k * catalan(k) for k in range(max_n)]))
    for m in range(1, max_n // 2 + 1):
        out.append(_check("catalan", "P_2n eliminated into odd P's", 2 * m,
                          v_to_gamma(even_p_elimination(m)), p_function(2 * m)))
    return out


def suite_lemma34(max_n):
    return [_guard("lemma34", "(2z+sqrt(1+4z^2))^(n+1) coefficients = (n+1) g_k(n)/k!", max_n,
                   lambda: verify_lemma34(max_n, max_n))]


def suite_pexp(max_n):
    return [
        _check("pexp", "P_lambda expansion = basis conversion of the power-sum form", n,
               sh_p_expansion(n), p_basis_convert(sh_powersum(n), n))
        for n in range(1, max_n + 1)
    ]


def suite_cauchy(max_n, max_m=6):
    out = []
    for m in range(0, max_m + 1):
        km = q_series(max(max_n, 1)) ** m
        for n in range(1, max_n + 1):
            lhs = PPoly()
            for lam in gen_partitions(n, "distinct"):
                lhs = lhs + p_lambda(lam) * (2 ** len(lam) * principal_spec(lam, m))
            out.append(_check("cauchy", f"Cauchy identity at y = 1^{m}", n, lhs, km[n]))
    return out


def suite_nspf(max_n):
    out = []
    for n in range(1, max_n + 1):
        out.append(_guard("nspf", "block census: sizes, counts per label, total", n,
                          lambda n=n: partition_into_blocks(n)))
        if n <= 5:
            out.append(_guard("nspf", "enumerated NSPF count = 2^n (n+1)^(n-1)", n,
                              lambda n=n: nspf_count(n)))
    return out


def suite_fixpoints(max_n):
    out = []
    for n in range(1, max_n + 1):
        counts = count_fixed_all(n)
        out.append(_check("fixpoints", "fixed parking functions = (n+1)^(len-1)", n,
                          counts, {lam: total_fixed_predicted(lam) for lam in counts}))
    return out


def suite_serious(max_n):
    return [
        _check("serious", "odd-P blocks: total size and block count", n,
               serious_spf_numerology(n), (2**n * (n + 1) ** (n - 1), schroeder(n)))
        for n in range(1, max_n + 1)
    ]


def suite_binomial(max_n):
    return [
        _check("binomial", "coefficient of P_1^n is C(2n, n)", n,
               sh_main_v(n)[(1,) * n], Fraction(comb(2 * n, n)))
        for n in range(1, max_n + 1)
    ]


def suite_genfun(max_n):
    order = max_n
    h = h_series(order - 1)
    pf = pf_generating_series(order)
    return [
        _check("genfun", "sum pf_n t^(n+1) inverts t / H(x,t)", order,
               (h.reciprocal().shift_up()).comp_inverse(), pf),
        _check("genfun", "inverse of t H(x,-t) is sum omega(pf_n) t^(n+1)", order,
               h.subs_neg().shift_up().comp_inverse(), pf.map(omega)),
        _check("genfun", "sum sh_n t^(n+1) inverts t K(x,-t)", order,
               shifted_inverse_series(order).comp_inverse(), sh_generating_series(order)),
    ]


# name -> (function, default max_n, hard bound)
SUITES = {
    "routes": (suite_routes, 8, 12),
    "dim": (suite_dim, 10, 16),
    "schroeder": (suite_schroeder, 8, 10),
    "lemma31": (suite_lemma31, 24, 40),
    "catalan": (suite_catalan, 12, 20),
    "lemma34": (suite_lemma34, 10, 20),
    "pexp": (suite_pexp, 8, 10),
    "cauchy": (suite_cauchy, 6, 8),
    "nspf": (suite_nspf, 5, 8),
    "fixpoints": (suite_fixpoints, 6, 7),
    "serious": (suite_serious, 8, 12),
    "binomial": (suite_binomial, 8, 16),
    "genfun": (suite_genfun, 8, 10),
}


def run_suite(name, max_n=None):
    fn, default, _ = SUITES[name]
    return fn(default if max_n is None else max_n)
