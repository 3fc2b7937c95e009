"""Plücker relations among the coefficients ``c_lambda``.

Each ``c_lambda`` is a maximal minor ``|gamma_{lam_N+1}, ..., gamma_{lam_1+N}|``
of the infinite matrix of columns ``gamma_b``. The quadratic relations
between such minors come from Laplace-expanding a ``2N x 2N`` determinant
with repeated columns, which vanishes identically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .determinant import q_integer
from .kernel import as_rational, det_exact
from .partitions import Partition, hook_partition, partition_from_hooks
from .symmetric import e_elem

__all__ = [
    "GammaBasis",
    "columns_of",
    "partition_of_columns",
    "minor",
    "c_of",
    "same_relation",
    "laplace_plucker",
    "plucker_terms",
    "sigma_sequence",
    "hook_sigma_sequence",
    "two_hook_relation",
    "two_hook_terms",
    "multi_hook_relation",
    "multi_hook_terms",
    "admissible_two_hook",
    "admissible_multi_hook",
]


@dataclass(frozen=True)
class GammaBasis:
    """Columns ``gamma_b(a) = [q-integer (q^{b-a+1} - q^{a-1})/(q-1)] e_{a-b+N-1}(-v)``."""

    v: tuple[Fraction, ...]
    q: Fraction

    def __init__(self, v: Sequence, q):
        object.__setattr__(self, "v", tuple(as_rational(x) for x in v))
        object.__setattr__(self, "q", as_rational(q))

    @property
    def N(self) -> int:
        return len(self.v)

    def gamma(self, b: int) -> tuple[Fraction, ...]:
        return _gamma(self.v, self.q, b)


@lru_cache(maxsize=4096)
def _gamma(v: tuple, q: Fraction, b: int) -> tuple[Fraction, ...]:
    N = len(v)
    minus_v = [-x for x in v]
    out = []
    for a in range(1, N + 1):
        e = e_elem(-b + a + N - 1, minus_v)
        out.append(q_integer(b - a + 1, a - 1, q) * e if e else Fraction(0))
    return tuple(out)


def columns_of(lam, N: int) -> list[int]:
    """Column labels ``[lam_N + 1, lam_{N-1} + 2, ..., lam_1 + N]``."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) > N:
        raise ValueError(f"{lam} has more than {N} parts")
    return [lam.part(N + 1 - l) + l for l in range(1, N + 1)]


def partition_of_columns(cols: Sequence[int]) -> tuple[int, Partition | None]:
    """Sort column labels; return (sign of the sort, partition), or (0, None) on a repeat."""
    cols = list(cols)
    if len(set(cols)) != len(cols):
        return 0, None
    if min(cols) < 1:
        raise ValueError(f"column labels must be positive: {cols}")
    inversions = sum(1 for i in range(len(cols)) for j in range(i + 1, len(cols)) if cols[i] > cols[j])
    ordered = sorted(cols)
    N = len(ordered)
    parts = [ordered[N - i] - (N + 1 - i) for i in range(1, N + 1)]
    return (-1 if inversions % 2 else 1), Partition(parts)


def minor(cols: Sequence[int], basis: GammaBasis) -> Fraction:
    """``|gamma_{cols[0]}, ..., gamma_{cols[N-1]}|`` with columns in the given order."""
    N = basis.N
    if len(cols) != N:
        raise ValueError(f"need {N} columns, got {len(cols)}")
    if len(set(cols)) != N:
        return Fraction(0)
    gs = [basis.gamma(b) for b in cols]
    return det_exact([[g[a] for g in gs] for a in range(N)])


def c_of(lam, basis: GammaBasis) -> Fraction:
    return minor(columns_of(lam, basis.N), basis)


def laplace_plucker(mus: Sequence[int], nus: Sequence[int], basis: GammaBasis) -> Fraction:
    """``sum_p (-1)^{p+1} |mu_1..mu_{N-1}, nu_p| |nu_1..^nu_p..nu_{N+1}|``; always zero."""
    N = basis.N
    if len(mus) != N - 1 or len(nus) != N + 1:
        raise ValueError(f"need {N - 1} mu's and {N + 1} nu's")
    total = Fraction(0)
    for p in range(N + 1):
        left = minor(list(mus) + [nus[p]], basis)
        if left:
            right = minor(list(nus[:p]) + list(nus[p + 1 :]), basis)
            total += left * right if p % 2 == 0 else -left * right
    return total


def _key(lam: Partition, mu: Partition):
    return (lam, mu) if lam.parts <= mu.parts else (mu, lam)


def plucker_terms(mus: Sequence[int], nus: Sequence[int], N: int) -> dict:
    """Laplace expansion written as ``{(lam, mu): integer}`` meaning ``sum k c_lam c_mu``.

    Column orders are normalised with their permutation signs; products
    are keyed as unordered pairs and zero coefficients dropped.
    """
    out: dict = {}
    for p in range(N + 1):
        s1, lam = partition_of_columns(list(mus) + [nus[p]])
        s2, mu = partition_of_columns(list(nus[:p]) + list(nus[p + 1 :]))
        if not s1 or not s2:
            continue
        k = _key(lam, mu)
        out[k] = out.get(k, 0) + (1 if p % 2 == 0 else -1) * s1 * s2
    return {k: c for k, c in out.items() if c}


def sigma_sequence(lam, N: int) -> tuple[list[int], list[int]]:
    """Parameters that produce the relation containing ``c_lam c_phi``.

    Start from ``[1..N | 1..N]``, add ``lam_1`` to N, ``lam_2`` to N-1 and so
    on in the left half; the first N-1 entries are the mu's, the rest the nu's.
    """
    seq = columns_of(lam, N) + list(range(1, N + 1))
    return seq[: N - 1], seq[N - 1 :]


def hook_sigma_sequence(a_list: Sequence[int], b_list: Sequence[int], N: int) -> tuple[list[int], list[int]]:
    """Block-by-block parameter choice for hooks ``a_0 > ... > a_k``, ``b_0 > ... > b_k``."""
    _check_hooks(a_list, b_list, N)
    seq = list(range(1, N - b_list[0] + 1))
    for i, b in enumerate(b_list):
        upper = N - b_list[i + 1] if i + 1 < len(b_list) else N
        seq += list(range(N - b + 2, upper + 1))
    seq += [N + a + 1 for a in reversed(a_list)]
    mus = seq[:-1]
    return mus, [seq[-1]] + list(range(1, N + 1))


def _check_hooks(a_list, b_list, N):
    a_list, b_list = list(a_list), list(b_list)
    if len(a_list) != len(b_list) or not a_list:
        raise ValueError("need equally many (and at least one) a- and b-parts")
    if any(a_list[i] <= a_list[i + 1] for i in range(len(a_list) - 1)) or a_list[-1] < 0:
        raise ValueError(f"a-parts must be strictly decreasing and >= 0: {a_list}")
    if any(b_list[i] <= b_list[i + 1] for i in range(len(b_list) - 1)) or b_list[-1] < 1:
        raise ValueError(f"b-parts must be strictly decreasing and >= 1: {b_list}")
    if a_list[0] > N - 2 or b_list[0] > N:
        raise ValueError(f"hooks exceed the {N} x {N - 1} box: a={a_list}, b={b_list}")


def two_hook_terms(a1: int, a2: int, b1: int, b2: int) -> dict:
    """``c_[a2+1,1^(b2-1)] c_[a1+1,1^(b1-1)] - c_[a2+1,1^(b1-1)] c_[a1+1,1^(b2-1)] - c_phi c_lam``."""
    lam = partition_from_hooks([a1, a2], [b1, b2])
    terms = {
        _key(hook_partition(a2, b2), hook_partition(a1, b1)): 1,
        _key(hook_partition(a2, b1), hook_partition(a1, b2)): -1,
        _key(Partition(), lam): -1,
    }
    return terms


def two_hook_relation(a1: int, a2: int, b1: int, b2: int, basis: GammaBasis) -> bool:
    """Check the two-hook relation numerically at the basis's (v, q)."""
    _check_hooks([a1, a2], [b1, b2], basis.N)
    return _evaluate(two_hook_terms(a1, a2, b1, b2), basis) == 0


def multi_hook_terms(a_list: Sequence[int], b_list: Sequence[int]) -> dict:
    """Terms of ``sum_p (-1)^p c_{lam(k|p)} c_[a_0+1,1^(b_p-1)] - c_phi c_{lam(k+1)}``.

    ``a_list = [a_0 > a_1 > ... > a_k]``, ``b_list = [b_0 > ... > b_k]``;
    ``lam(k|p)`` has arms ``a_1..a_k`` and b-parts ``{b_0..b_k}`` without ``b_p``.
    """
    a0, rest_a = a_list[0], list(a_list[1:])
    terms: dict = {}
    for p, bp in enumerate(b_list):
        bs = [b for b in b_list if b != bp]
        key = _key(partition_from_hooks(rest_a, bs), hook_partition(a0, bp))
        terms[key] = terms.get(key, 0) + (-1) ** p
    key = _key(Partition(), partition_from_hooks(a_list, b_list))
    terms[key] = terms.get(key, 0) - 1
    return {k: c for k, c in terms.items() if c}


def multi_hook_relation(a_list: Sequence[int], b_list: Sequence[int], basis: GammaBasis) -> bool:
    _check_hooks(a_list, b_list, basis.N)
    return _evaluate(multi_hook_terms(a_list, b_list), basis) == 0


def _evaluate(terms: dict, basis: GammaBasis) -> Fraction:
    return sum((k * c_of(lam, basis) * c_of(mu, basis) for (lam, mu), k in terms.items()), Fraction(0))


def same_relation(x: dict, y: dict) -> bool:
    """True if two term dictionaries agree up to an overall sign."""
    return x == y or x == {k: -c for k, c in y.items()}


def admissible_two_hook(N: int):
    """All ``(a1, a2, b1, b2)`` with ``N-2 >= a1 > a2 >= 0`` and ``N >= b1 > b2 >= 1``."""
    for a1 in range(N - 1):
        for a2 in range(a1):
            for b1 in range(1, N + 1):
                for b2 in range(1, b1):
                    yield a1, a2, b1, b2


def admissible_multi_hook(N: int, size: int):
    """All ``(a_list, b_list)`` with ``size`` strictly decreasing entries in range."""
    for a in combinations(range(N - 2, -1, -1), size):
        for b in combinations(range(N, 0, -1), size):
            yield list(a), list(b)
