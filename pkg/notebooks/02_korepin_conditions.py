"""
Korepin's conditions on the configuration sum
=============================================

Symmetry, degree, recursion and the N=1 value determine Z_N uniquely.
Here they are checked exactly on the brute-force sum.
"""
import random
from fractions import Fraction

from dwkp.sixvertex import check_korepin, random_point, vertex_weight, z_bruteforce

rng = random.Random(1)

for N in range(1, 6):
    pts = [random_point(N, rng) for _ in range(2)]
    rep = check_korepin(N, pts, rng=rng)
    print(f"N={N}", "  ".join(f"{name}={'ok' if ok else 'FAIL'}" for name, ok in rep.checks()))

# the recursion at s_1 = t_1 / r, written out for N = 3
p = random_point(3, rng)
p = p.replace(s=(p.tt[0] / p.r,) + p.s[1:])
rhs = vertex_weight("c", 0, 0, p)
for k in (1, 2):
    rhs *= vertex_weight("b", k, 0, p) * vertex_weight("b", 0, k, p)
print("\nZ_3 at s_1 = t_1/r:", z_bruteforce(p))
print("recursion product: ", rhs * z_bruteforce(p.drop_first()))
print("Z_1 at r = 1/2:    ", z_bruteforce(p.replace(s=(1,), tt=(1,), r=Fraction(1, 2))))
