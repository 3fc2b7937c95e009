"""Closed-form routes to the domain wall partition function.

All formulas here are in the multiplicative variables ``u = s^2``,
``v = t^2``, ``q = r^2`` and carry the prefactor
``c_N = (q - 1)^N prod_i s_i t_i``. They agree with the sinh-weight sum of
:func:`dwkp.sixvertex.z_bruteforce` only after multiplying by the bridge
factor :func:`kappa_closed_form`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .kernel import TPoly, as_rational, det_exact, format_rational
from .partitions import Partition, enumerate_box
from .sixvertex import RapidityPoint, z_bruteforce
from .symmetric import character_poly, e_elem, h_elem, restrict, schur

__all__ = [
    "SingularPointError",
    "q_integer",
    "c_prefactor",
    "z_izergin",
    "izergin_core",
    "kappa_closed_form",
    "normalization_kappa",
    "z_lascoux",
    "lascoux_core",
    "c_lambda",
    "CoefficientTable",
    "coefficient_table",
    "z_schur_expansion",
    "z_cauchy_binet",
    "z_free",
    "time_count",
    "z_free_restricted",
]


class SingularPointError(ValueError):
    """The rapidities hit a pole of a determinant formula."""


def q_integer(m: int, k: int, q) -> Fraction:
    """``(q^m - q^k) / (q - 1)`` expanded as a signed sum of powers of q.

    Exponents may be negative. The expansion is finite at ``q = 1``.
    """
    q = as_rational(q)
    if m == k:
        return Fraction(0)
    lo, hi, sign = (k, m, 1) if m > k else (m, k, -1)
    return sign * sum((q ** e for e in range(lo, hi)), Fraction(0))


def time_count(N: int) -> int:
    """Number of time variables used for size N: the box weight N(N-1), at least 1."""
    return max(N * (N - 1), 1)


def c_prefactor(p: RapidityPoint) -> Fraction:
    c = (p.q - 1) ** p.N
    for s, t in zip(p.s, p.tt):
        c *= s * t
    return c


# -- Izergin -------------------------------------------------------------------


def izergin_core(u: Sequence, v: Sequence, q) -> Fraction:
    """Izergin's expression without the prefactor ``c_N``."""
    u = [as_rational(x) for x in u]
    v = [as_rational(x) for x in v]
    q = as_rational(q)
    N = len(u)
    num = Fraction(1)
    for ui in u:
        for vj in v:
            num *= (ui - vj) * (q * ui - vj)
    den = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            den *= (u[i] - u[j]) * (v[j] - v[i])
    if num == 0 or den == 0:
        raise SingularPointError("coinciding rapidities in Izergin's formula")
    m = [[1 / ((ui - vj) * (q * ui - vj)) for vj in v] for ui in u]
    return num / den * det_exact(m)


def z_izergin(p: RapidityPoint) -> Fraction:
    bad = p.singular_pair()
    if bad is not None:
        raise SingularPointError(f"Izergin's formula is singular: {bad}")
    return c_prefactor(p) * izergin_core(p.u, p.v, p.q)


def kappa_closed_form(p: RapidityPoint) -> Fraction:
    """``(-1)^N (2r)^(-N^2) prod_i (s_i t_i)^(-N)``.

    Multiplying any of the determinant forms by this factor gives the sum
    over configurations with sinh weights.
    """
    N = p.N
    k = Fraction((-1) ** N) / (2 * p.r) ** (N * N)
    for s, t in zip(p.s, p.tt):
        k /= (s * t) ** N
    return k


def normalization_kappa(p: RapidityPoint) -> Fraction:
    """Measured ratio ``z_bruteforce(p) / z_izergin(p)``."""
    zi = z_izergin(p)
    if zi == 0:
        raise SingularPointError("Izergin's formula vanishes at this point")
    return z_bruteforce(p) / zi


# -- Lascoux and the Schur expansion ------------------------------------------


def _beta(j: int, k: int, minus_v: Sequence[Fraction], q: Fraction) -> Fraction:
    N = len(minus_v)
    e = e_elem(-j + k + N - 1, minus_v)
    if not e:
        return e
    return q_integer(j - k + 1, k - 1, q) * e


def _beta_matrix(v: Sequence, q) -> list[list[Fraction]]:
    """Rows j = 1..2N-1, columns k = 1..N."""
    q = as_rational(q)
    minus_v = [-as_rational(x) for x in v]
    N = len(minus_v)
    return [[_beta(j, k, minus_v, q) for k in range(1, N + 1)] for j in range(1, 2 * N)]


def lascoux_core(u: Sequence, v: Sequence, q) -> Fraction:
    """``det[sum_j h_{j-i}(u) beta_{j,k}(v)]`` without the prefactor."""
    N = len(u)
    hs = {n: h_elem(n, u) for n in range(0, 2 * N - 1)}
    beta = _beta_matrix(v, q)
    m = [
        [
            sum((hs.get(j - i, Fraction(0)) * beta[j - 1][k] for j in range(1, 2 * N)), Fraction(0))
            for k in range(N)
        ]
        for i in range(1, N + 1)
    ]
    return det_exact(m)


def z_lascoux(p: RapidityPoint) -> Fraction:
    return c_prefactor(p) * lascoux_core(p.u, p.v, p.q)


def c_lambda(lam, v: Sequence, q) -> Fraction:
    """Coefficient of ``S_lambda(u)`` in the expansion of Lascoux's determinant.

    Row l of the matrix is row ``j_l = lam_{N+1-l} + l`` of the beta matrix.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    N = len(v)
    if not lam.fits_in_box(N, N - 1):
        raise ValueError(f"{lam} does not fit in the {N} x {N - 1} box")
    q = as_rational(q)
    minus_v = [-as_rational(x) for x in v]
    rows = [lam.part(N + 1 - l) + l for l in range(1, N + 1)]
    return det_exact([[_beta(j, k, minus_v, q) for k in range(1, N + 1)] for j in rows])


@dataclass(frozen=True)
class CoefficientTable:
    """``c_lambda(v, q)`` for every lambda in the N x (N-1) box."""

    N: int
    values: dict

    @property
    def c_phi(self) -> Fraction:
        return self.values[Partition()]

    def c(self, lam) -> Fraction:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return self.values[lam]

    def d(self, lam) -> Fraction:
        """Normalised coefficient ``c_lambda / c_phi``."""
        if self.c_phi == 0:
            raise SingularPointError("c_phi vanishes at this (v, q)")
        return self.c(lam) / self.c_phi

    def to_json(self) -> dict:
        return {
            json.dumps(lam.to_json()): format_rational(c) for lam, c in self.values.items()
        }


def coefficient_table(v: Sequence, q) -> CoefficientTable:
    N = len(v)
    return CoefficientTable(N, {lam: c_lambda(lam, v, q) for lam in enumerate_box(N)})


def z_schur_expansion(p: RapidityPoint, table: CoefficientTable | None = None) -> Fraction:
    """``c_N sum_lambda c_lambda(v) S_lambda(u)`` over the N x (N-1) box."""
    table = table or coefficient_table(p.v, p.q)
    total = sum((c * schur(lam, p.u) for lam, c in table.values.items() if c), Fraction(0))
    return c_prefactor(p) * total


def z_cauchy_binet(p: RapidityPoint) -> Fraction:
    """Lascoux's determinant expanded over column subsets ``j_1 < ... < j_N``."""
    N = p.N
    hs = {n: h_elem(n, p.u) for n in range(0, 2 * N - 1)}
    beta = _beta_matrix(p.v, p.q)
    total = Fraction(0)
    for cols in combinations(range(1, 2 * N), N):
        a = det_exact([[hs.get(j - i, Fraction(0)) for j in cols] for i in range(1, N + 1)])
        if a:
            total += a * det_exact([beta[j - 1] for j in cols])
    return c_prefactor(p) * total


def z_free(v: Sequence, q, table: CoefficientTable | None = None) -> TPoly:
    """``sum_lambda c_lambda(v) chi_lambda(t)`` with independent times.

    The u-dependent prefactor ``c_N`` is left out; multiply it in after
    restricting the times to power sums.
    """
    N = len(v)
    M = time_count(N)
    table = table or coefficient_table(v, q)
    acc = TPoly.zero(M)
    for lam, c in table.values.items():
        if c:
            acc = acc + character_poly(lam, M) * c
    return acc


def z_free_restricted(p: RapidityPoint) -> Fraction:
    return c_prefactor(p) * restrict(z_free(p.v, p.q), p.u)
