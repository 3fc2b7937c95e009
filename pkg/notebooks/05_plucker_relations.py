"""
Plücker relations among the coefficients
========================================

The coefficients c_lambda are maximal minors of a matrix of columns gamma_b,
so they satisfy quadratic relations. Each relation comes from a vanishing
Laplace expansion; the parameter sequence built from the hooks of lambda
selects the one containing c_phi c_lambda.
"""
import random

from dwkp.plucker import (
    GammaBasis,
    admissible_multi_hook,
    admissible_two_hook,
    hook_sigma_sequence,
    laplace_plucker,
    multi_hook_relation,
    plucker_terms,
    sigma_sequence,
    two_hook_relation,
)
from dwkp.sixvertex import random_point

rng = random.Random(3)
p = random_point(3, rng)
basis = GammaBasis(p.v, p.q)

mus, nus = sigma_sequence([2, 2], 3)
print("parameters for lambda = [2,2]:", mus, "|", nus)
print("Laplace expansion value:", laplace_plucker(mus, nus, basis))
for (lam, mu), k in plucker_terms(mus, nus, 3).items():
    print(f"  {k:+d} c{list(lam)} c{list(mu)}")

for N in (4, 5):
    p = random_point(N, rng)
    basis = GammaBasis(p.v, p.q)
    two = list(admissible_two_hook(N))
    multi = [h for size in range(3, N) for h in admissible_multi_hook(N, size)]
    print(f"N={N}: two-hook {sum(two_hook_relation(*h, basis) for h in two)}/{len(two)}, "
          f"multi-hook {sum(multi_hook_relation(a, b, basis) for a, b in multi)}/{len(multi)}")
    a, b = multi[0]
    print(f"  sequence for a={a}, b={b}:", hook_sigma_sequence(a, b, N))
