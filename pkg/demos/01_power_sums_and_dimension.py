"""sh_n in the power-sum basis, and where its dimension comes from.

Run with ``python demos/01_power_sums_and_dimension.py``.
"""

from shiftpf import dimension, pf_powersum, sh_powersum, shiftify
from shiftpf.render import format_terms

# pf_n has a power-sum expansion over all partitions of n ...
for n in range(1, 5):
    print(f"pf_{n} =", format_terms(pf_powersum(n).terms, "p"))

# ... and shiftification keeps only odd parts, doubling each p_odd.
print()
for n in range(1, 5):
    sh = sh_powersum(n)
    assert sh == shiftify(pf_powersum(n))
    print(f"sh_{n} =", format_terms(sh.terms, "p"))

# The dimension <f, p_1^n> counts colored parking functions.
print()
for n in range(1, 9):
    print(n, dimension(pf_powersum(n), n), dimension(sh_powersum(n), n))
