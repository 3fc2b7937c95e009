"""
The fermionic expectation value is proportional to Z_N
======================================================

Build X_0 ... X_{N-2} from the normalised coefficients d_lambda, expand the
product of exponentials on the vacuum, and compare the resulting polynomial
in the time variables with the Schur-expansion polynomial z_free.
"""
import random

from dwkp.determinant import coefficient_table, z_free
from dwkp.fock import f_free, fermionic_state, monomial_expansion, verify_main
from dwkp.sixvertex import random_point

rng = random.Random(2)

p = random_point(3, rng)
table = coefficient_table(p.v, p.q)
state = fermionic_state(table)
print(f"N=3: the product of exponentials has {len(state)} terms")
print("equals the sum of signed d_lambda monomials:", state == monomial_expansion(table))

F = f_free(table)
print("c_phi F_3 == z_free:", F * table.c_phi == z_free(p.v, p.q, table))
print("F_3 =", F)

for N in range(2, 6):
    p = random_point(N, rng)
    rep = verify_main(p.v, p.q, points=[p], polynomial=N <= 4)
    print(f"N={N}  polynomial identity={rep.polynomial_identity}  restricted={rep.restricted}")
