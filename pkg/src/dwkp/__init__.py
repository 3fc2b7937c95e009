"""Exact domain wall partition functions of the six-vertex model.

The partition function is computed by configuration enumeration, by the
Izergin and Lascoux determinants, by a Schur-function expansion and as a
free-fermion expectation value; every route uses exact rational arithmetic.
"""
from .determinant import (
    SingularPointError,
    coefficient_table,
    kappa_closed_form,
    z_free,
    z_izergin,
    z_lascoux,
    z_schur_expansion,
)
from .fock import f_free, fermionic_state, verify_main
from .kernel import Rational, TPoly, det_exact
from .partitions import Partition, enumerate_box, frobenius
from .sixvertex import RapidityPoint, check_korepin, enumerate_dwbc, random_point, z_bruteforce
from .symmetric import character_poly, schur

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "RapidityPoint",
    "Rational",
    "SingularPointError",
    "TPoly",
    "character_poly",
    "check_korepin",
    "coefficient_table",
    "det_exact",
    "enumerate_box",
    "enumerate_dwbc",
    "f_free",
    "fermionic_state",
    "frobenius",
    "kappa_closed_form",
    "random_point",
    "schur",
    "verify_main",
    "z_bruteforce",
    "z_free",
    "z_izergin",
    "z_lascoux",
    "z_schur_expansion",
]
