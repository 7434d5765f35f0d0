"""sh_n as a polynomial in P_1, P_3, P_5, ... and in the P_lambda basis."""

from shiftpf.numbers import schroeder
from shiftpf.render import format_terms
from shiftpf.schur_p import even_p_elimination
from shiftpf.shifted_pf import sh_main_v, sh_p_expansion, verify_routes

print("even P's in terms of odd ones:")
for m in range(1, 4):
    print(f"  P{2 * m} =", format_terms(even_p_elimination(m), "vodd"))

print("\nsh_n in the odd generators (every route cross-checked):")
for n in range(1, 9):
    verify_routes(n)
    v = sh_main_v(n)
    print(f"  sh_{n} =", format_terms(v, "vodd"), f"   [sum {sum(v.values())} = r_{n} = {schroeder(n)}]")

print("\nsh_n in the P_lambda basis; the P_(n) coefficient is again r_n:")
for n in range(1, 7):
    print(f"  sh_{n} =", format_terms(sh_p_expansion(n), "P"))
