"""Generating sh_n by compositional inversion.

The series sum sh_n t^(n+1) is the compositional inverse of t K(x,-t), where
K(x,t) = prod (1 + x_i t)/(1 - x_i t).  We build K from its logarithm, invert
it, and compare with the closed power-sum formula.
"""

from shiftpf.schur_p import q_series
from shiftpf.shifted_pf import sh_generating_series, shifted_inverse_series
from shiftpf.render import format_terms
from shiftpf.series import Series

order = 7
k = q_series(order)
print("K(x,t) up to t^4:")
for j in range(5):
    print(f"  t^{j}:", format_terms(k[j].terms, "p"))

inverse = shifted_inverse_series(order).comp_inverse()
assert inverse == sh_generating_series(order)
print("\ncoefficients of the inverse series (sh_0, sh_1, ...):")
for j in range(1, order + 1):
    print(f"  t^{j}:", format_terms(inverse[j].terms, "p"))

# The same machinery over Q gives the large Schroeder numbers.
t = Series([0, 1], 10)
f = t * Series([1, -1], 10) / Series([1, 1], 10)
print("\ninverse of t(1-t)/(1+t):", [int(c) for c in f.comp_inverse().coeffs])
