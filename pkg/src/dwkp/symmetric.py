"""Symmetric functions in finitely many variables and their images in the
time-variable ring.

Numeric functions (:func:`h_elem`, :func:`e_elem`, :func:`schur`) act on a
list of Fractions. Polynomial functions (:func:`p_poly`, :func:`hmn_poly`,
:func:`character_poly`) return :class:`~dwkp.kernel.TPoly` objects in a
fixed number ``M`` of time variables.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .kernel import TPoly, as_rational, det_exact
from .partitions import Partition, frobenius

__all__ = [
    "power_sums",
    "p_poly",
    "h_elem",
    "e_elem",
    "schur",
    "hmn_poly",
    "character_poly",
    "restrict",
]


def power_sums(u: Sequence, M: int) -> list[Fraction]:
    """``t_n = (1/n) sum_i u_i^n`` for ``n = 1..M``."""
    if M < 1:
        raise ValueError("M must be >= 1")
    u = [as_rational(x) for x in u]
    return [sum((x ** n for x in u), Fraction(0)) / n for n in range(1, M + 1)]


@lru_cache(maxsize=None)
def p_poly(n: int, M: int) -> TPoly:
    """Coefficient of ``z^n`` in ``exp(sum_k t_k z^k)``.

    Built from ``n p_n = sum_{k=1}^n k t_k p_{n-k}``.
    """
    if n < 0:
        return TPoly.zero(M)
    if n == 0:
        return TPoly.one(M)
    if n > M:
        raise ValueError(f"p_{n} needs at least {n} time variables, have {M}")
    acc = TPoly.zero(M)
    for k in range(1, n + 1):
        acc = acc + TPoly.variable(k, M) * p_poly(n - k, M) * k
    return acc * Fraction(1, n)


def h_elem(n: int, x: Sequence) -> Fraction:
    """Complete homogeneous symmetric function ``h_n(x)``."""
    if n < 0:
        return Fraction(0)
    # h_n(x_1..x_k) = h_n(x_1..x_{k-1}) + x_k h_{n-1}(x_1..x_k)
    row = [Fraction(1)] + [Fraction(0)] * n
    for xk in x:
        xk = as_rational(xk)
        for j in range(1, n + 1):
            row[j] += xk * row[j - 1]
    return row[n]


def e_elem(n: int, x: Sequence) -> Fraction:
    """Elementary symmetric function ``e_n(x)``."""
    if n < 0 or n > len(x):
        return Fraction(0)
    row = [Fraction(1)] + [Fraction(0)] * n
    for xk in x:
        xk = as_rational(xk)
        for j in range(n, 0, -1):
            row[j] += xk * row[j - 1]
    return row[n]


def schur(lam, u: Sequence) -> Fraction:
    """Jacobi-Trudi ``det[h_{lam_i - i + l}(u)]`` of size ``len(u)``."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    N = len(u)
    if len(lam) > N:
        raise ValueError(f"{lam} has more parts than the {N} variables")
    if N == 0:
        return Fraction(1)
    parts = lam.padded(N)
    hs = {}

    def h(k):
        if k not in hs:
            hs[k] = h_elem(k, u)
        return hs[k]

    return det_exact([[h(parts[i] - i + l) for l in range(N)] for i in range(N)])


@lru_cache(maxsize=None)
def hmn_poly(m: int, n: int, M: int) -> TPoly:
    """Hook polynomial ``(-1)^n sum_{k=0}^n p_{k+m+1}(t) p_{n-k}(-t)``."""
    if m < 0 or n < 0:
        raise ValueError("hook polynomial indices must be non-negative")
    acc = TPoly.zero(M)
    for k in range(n + 1):
        acc = acc + p_poly(k + m + 1, M) * p_poly(n - k, M).negate_times()
    return -acc if n % 2 else acc


@lru_cache(maxsize=None)
def _character_poly(parts: tuple[int, ...], M: int) -> TPoly:
    fd = frobenius(Partition(parts))
    if fd.d == 0:
        return TPoly.one(M)
    return det_exact([[hmn_poly(mi, nj, M) for nj in fd.n] for mi in fd.m])


def character_poly(lam, M: int | None = None) -> TPoly:
    """Giambelli determinant ``det[h_{m_i, n_j}(t)]`` over the Frobenius grid.

    ``M`` defaults to ``|lam|`` (at least 1), the largest time variable used.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if M is None:
        M = max(lam.weight, 1)
    if M < lam.weight:
        raise ValueError(f"chi_{list(lam)} needs {lam.weight} time variables, have {M}")
    return _character_poly(lam.parts, M)


def restrict(poly: TPoly, u: Sequence) -> Fraction:
    """Evaluate ``poly`` at the power-sum point ``t_n = (1/n) sum u_i^n``."""
    if poly.nvars == 0:
        return poly.constant_term()
    return poly.evaluate(power_sums(u, poly.nvars))
