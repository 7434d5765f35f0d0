"""Exact computations with the shifted parking function symmetric function sh_n."""

__version__ = "0.1.0"

from .pring import PPoly, dimension, elem_sym, eval_ones, hom_sym, inner_product, shiftify  # noqa: E402
from .schur_p import p_basis_convert, p_function, p_lambda, v_to_gamma  # noqa: E402
from .series import Series, lagrange_coeff  # noqa: E402
from .shifted_pf import (  # noqa: E402
    pf_powersum,
    sh_easy_v,
    sh_lagrange,
    sh_main_v,
    sh_p_expansion,
    sh_powersum,
    verify_routes,
)

__all__ = [
    "PPoly",
    "Series",
    "dimension",
    "elem_sym",
    "eval_ones",
    "hom_sym",
    "inner_product",
    "lagrange_coeff",
    "p_basis_convert",
    "p_function",
    "p_lambda",
    "pf_powersum",
    "sh_easy_v",
    "sh_lagrange",
    "sh_main_v",
    "sh_p_expansion",
    "sh_powersum",
    "shiftify",
    "v_to_gamma",
    "verify_routes",
]
