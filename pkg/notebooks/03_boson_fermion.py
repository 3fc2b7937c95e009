"""
Boson-fermion correspondence
============================

Each partition lambda gives a charge-zero fermion monomial. Its pairing
with exp(H(t)) is, up to the sign (-1)^(sum of b-parts), the character
polynomial chi_lambda(t).
"""
from dwkp.fock import monomial_state, vacuum_pairing
from dwkp.partitions import enumerate_box, frobenius
from dwkp.symmetric import character_poly

M = 6
for lam in enumerate_box(3):
    fd = frobenius(lam)
    sign = (-1) ** sum(fd.b_parts)
    pairing = vacuum_pairing(monomial_state(lam), M)
    ok = pairing == character_poly(lam, M) * sign
    print(f"{str(list(lam)):<12} a={list(fd.a_parts)} b={list(fd.b_parts)}  {ok}  {pairing}")
