"""Schur P- and Q-functions in the power-sum basis.

``Q_n`` comes from the generating function
``K(x,t) = prod (1 + x_i t)/(1 - x_i t) = exp(2 sum_{k odd} p_k t^k / k)``
and ``P_n = Q_n / 2``.  For longer strict partitions ``Q_lambda`` is the
Pfaffian of the two-row functions

    Q_(r,s) = Q_r Q_s + 2 sum_{i=1}^{s} (-1)^i Q_{r+i} Q_{s-i},

padding odd-length partitions with a trailing zero, and
``P_lambda = 2^(-len) Q_lambda``.

Expansions in the P-world are plain dicts from partitions to ``Fraction``:
a *PExpansion* maps strict partitions to coefficients of ``P_lambda``; a
*VExpansion* maps partitions to coefficients of ``V_lambda = P_l1 P_l2 ...``.
"""

from fractions import Fraction
from functools import lru_cache

from .numbers import catalan
from .partitions import (
    check_partition,
    gen_partitions,
    multinomial,
    multiplicities,
    normalize,
)
from .pring import PPoly, eval_ones, hom_sym, shiftify
from .series import Series


@lru_cache(maxsize=None)
def q_series(order):
    """K(x, t) to the given order, with coefficients in the odd power sums."""
    if order < 1:
        raise ValueError("order must be positive")
    log = [PPoly()] + [
        PPoly.p(k, coeff=Fraction(2, k)) if k % 2 else PPoly() for k in range(1, order + 1)
    ]
    return Series(log, order).exp()


def q_function(n):
    if n < 0:
        return PPoly()
    if n == 0:
        return PPoly.const(1)
    return q_series(max(n, 16))[n]


@lru_cache(maxsize=None)
def p_function(n):
    """P_n in the power-sum basis (P_0 = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return q_function(n) / 2 if n else PPoly.const(1)


def p_function_via_h(n):
    """Independent construction: 2 P_n = h_n after shiftification."""
    return shiftify(hom_sym(n)) / 2


def _q_two_row(r, s):
    acc = q_function(r) * q_function(s)
    for i in range(1, s + 1):
        acc = acc + q_function(r + i) * q_function(s - i) * (2 * (-1) ** i)
    return acc


def pfaffian(matrix):
    """Pfaffian of a skew-symmetric matrix (list of lists) by first-row expansion."""
    size = len(matrix)
    if size == 0:
        return 1
    if size % 2:
        return 0
    total = 0
    rest = list(range(1, size))
    for pos, j in enumerate(rest):
        entry = matrix[0][j]
        if entry == 0:
            continue
        keep = [r for r in rest if r != j]
        minor = [[matrix[a][b] for b in keep] for a in keep]
        term = entry * pfaffian(minor)
        total = total + term if pos % 2 == 0 else total - term
    return total


@lru_cache(maxsize=None)
def q_lambda(lam):
    lam = check_partition(lam, "distinct")
    if len(lam) <= 1:
        return q_function(lam[0]) if lam else PPoly.const(1)
    parts = list(lam) + ([0] if len(lam) % 2 else [])
    size = len(parts)
    zero = PPoly()
    mat = [[zero] * size for _ in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            q = _q_two_row(parts[a], parts[b])
            mat[a][b], mat[b][a] = q, -q
    return pfaffian(mat)


@lru_cache(maxsize=None)
def p_lambda(lam):
    """P_lambda for a strict partition, in the power-sum basis."""
    lam = check_partition(lam, "distinct")
    return q_lambda(lam) / 2 ** len(lam)


def principal_spec(lam, m):
    """P_lambda(1^m)."""
    return eval_ones(p_lambda(tuple(lam)), m)


def v_monomial(lam):
    """V_lambda = P_l1 P_l2 ... in the power-sum basis."""
    out = PPoly.const(1)
    for part in lam:
        out = out * p_function(part)
    return out


def v_to_gamma(v):
    """Expand a VExpansion into the power-sum basis."""
    out = PPoly()
    for lam, c in v.items():
        out = out + v_monomial(lam) * c
    return out


def p_exp_to_gamma(b):
    """Expand a PExpansion into the power-sum basis."""
    out = PPoly()
    for lam, c in b.items():
        out = out + p_lambda(lam) * c
    return out


def _solve(matrix, rhs):
    """Solve a square nonsingular linear system exactly (Gauss-Jordan over Q)."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def p_basis_convert(f, n):
    """Coefficients of a homogeneous degree-``n`` element of Gamma in the P_lambda basis."""
    if not f.is_zero() and f.degree() != n:
        raise ValueError(f"expected a homogeneous element of degree {n}")
    if not f.in_gamma():
        raise ValueError("input has even power sums; it is not in Gamma")
    rows = gen_partitions(n, "odd")
    cols = gen_partitions(n, "distinct")
    matrix = [[p_lambda(mu).coeff(rho) for mu in cols] for rho in rows]
    rhs = [f.coeff(rho) for rho in rows]
    sol = _solve(matrix, rhs)
    return {mu: c for mu, c in zip(cols, sol) if c}


def even_p_elimination(n):
    """P_{2n} as a polynomial in the odd P's (a VExpansion over odd partitions).

    Comes from B = (-1 + sqrt(1 + 4 A^2)) / 2 with A, B the odd and even
    parts of (K - 1)/2 and the Catalan expansion of the square root.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for lam in gen_partitions(2 * n, "odd"):
        ell = len(lam)
        k = (ell - 2) // 2
        c = (-1) ** k * catalan(k) * multinomial(ell, multiplicities(lam).values())
        out[lam] = Fraction(c)
    return out


def v_mul(a, b):
    out = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = normalize(la + lb)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def v_add(a, b, scale=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v * scale
    return {k: v for k, v in out.items() if v}


def reduce_to_odd(v):
    """Rewrite a VExpansion with even parts in terms of odd-part monomials only."""
    out = {}
    for lam, c in v.items():
        term = {(): Fraction(1)}
        for part in lam:
            factor = {(part,): Fraction(1)} if part % 2 else even_p_elimination(part // 2)
            term = v_mul(term, factor)
        out = v_add(out, term, c)
    return out
