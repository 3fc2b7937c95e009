import random
from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from dwkp.kernel import TPoly
from dwkp.partitions import Partition, enumerate_box
from dwkp.symmetric import (
    character_poly,
    e_elem,
    h_elem,
    hmn_poly,
    p_poly,
    power_sums,
    restrict,
    schur,
)

from conftest import random_fraction

vectors = st.lists(st.fractions(-5, 5, max_denominator=6), min_size=1, max_size=4)


def tableaux_schur(lam, u):
    """Sum of u^T over semistandard tableaux of shape lam with entries 1..len(u)."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    total = Fraction(0)
    for filling in product(range(len(u)), repeat=len(cells)):
        t = dict(zip(cells, filling))
        rows_ok = all(t[i, j - 1] <= t[i, j] for i, j in cells if j)
        cols_ok = all(t[i - 1, j] < t[i, j] for i, j in cells if i)
        if rows_ok and cols_ok:
            w = Fraction(1)
            for x in filling:
                w *= u[x]
            total += w
    return total


def p_direct(n, M):
    """Multi-index expansion: sum over sum k m_k = n of prod t_k^m_k / m_k!."""
    acc = TPoly.zero(M)
    for ms in product(*(range(n // k + 1) for k in range(1, n + 1))):
        if sum(k * m for k, m in zip(range(1, n + 1), ms)) != n:
            continue
        exps = tuple(list(ms) + [0] * (M - n))
        coeff = Fraction(1)
        for m in ms:
            coeff /= factorial(m)
        acc = acc + TPoly({exps: coeff}, M)
    return acc


def t(n, M):
    return TPoly.variable(n, M)


def test_power_sums_examples():
    assert power_sums([1], 3) == [1, Fraction(1, 2), Fraction(1, 3)]
    assert power_sums([2, -2], 2) == [0, 4]
    assert power_sums([1, 2], 2) == [3, Fraction(5, 2)]


def test_p_poly_examples():
    assert p_poly(0, 3) == TPoly.one(3)
    assert p_poly(-2, 3) == TPoly.zero(3)
    assert p_poly(2, 3) == t(1, 3) * t(1, 3) * Fraction(1, 2) + t(2, 3)


@pytest.mark.parametrize("n", range(1, 7))
def test_p_poly_matches_multi_index_sum(n):
    assert p_poly(n, 6) == p_direct(n, 6)
    assert p_poly(n, 6).weighted_degree() == n
    assert p_poly(n, 6).is_weighted_homogeneous(n)


def test_h_and_e_examples():
    assert h_elem(0, [Fraction(3), Fraction(5)]) == 1
    assert h_elem(2, [1, 2]) == 7
    assert e_elem(2, [Fraction(3), Fraction(5)]) == 15
    assert e_elem(3, [1, 2]) == 0
    assert h_elem(-1, [1]) == 0


@given(vectors)
def test_generating_function_identity(u):
    # sum h_n z^n * sum e_n(-u) z^n = 1 through order 8
    minus = [-x for x in u]
    for n in range(1, 9):
        assert sum(h_elem(k, u) * e_elem(n - k, minus) for k in range(n + 1)) == 0


def test_schur_examples():
    a, b = Fraction(2, 3), Fraction(-5, 7)
    assert schur([], [a, b]) == 1
    assert schur([1], [a, b]) == a + b
    assert schur([2, 1], [1, 2]) == tableaux_schur([2, 1], [1, 2]) == 6
    with pytest.raises(ValueError):
        schur([1, 1, 1], [a, b])


@pytest.mark.parametrize("lam", [[2, 1], [3, 1], [2, 2, 1], [3, 2, 1]])
def test_schur_matches_tableaux(lam, rng):
    u = [random_fraction(rng) for _ in range(3)]
    assert schur(lam, u) == tableaux_schur(lam, u)


@given(st.integers(0, 2**32))
def test_schur_symmetric(seed):
    rng = random.Random(seed)
    lam = rng.choice(enumerate_box(4))
    u = [random_fraction(rng) for _ in range(4)]
    v = u[:]
    rng.shuffle(v)
    assert schur(lam, u) == schur(lam, v)


def test_hmn_examples():
    M = 3
    assert hmn_poly(0, 0, M) == t(1, M)
    assert hmn_poly(1, 0, M) == t(1, M) * t(1, M) * Fraction(1, 2) + t(2, M)
    assert hmn_poly(0, 1, M) == t(1, M) * t(1, M) * Fraction(1, 2) - t(2, M)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (3, 0), (2, 2), (0, 4)])
def test_hmn_degree_is_hook_length(m, n):
    assert hmn_poly(m, n, 8).weighted_degree() == m + n + 1
    assert hmn_poly(m, n, 8).is_weighted_homogeneous(m + n + 1)


def test_character_poly_examples():
    assert character_poly([]) == TPoly.one(1)
    assert character_poly([1]) == t(1, 1)
    assert character_poly([2, 1], 6).weighted_degree() == 3


def test_restrict_examples(rng):
    u = [random_fraction(rng) for _ in range(3)]
    assert restrict(TPoly.one(4), u) == 1
    assert restrict(character_poly([1], 4), u) == h_elem(1, u)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_character_restricts_to_schur(N, rng):
    M = max(N * (N - 1), 1)
    for _ in range(2):
        u = [random_fraction(rng) for _ in range(N)]
        for lam in enumerate_box(N):
            assert restrict(character_poly(lam, M), u) == schur(lam, u), lam


def test_character_poly_needs_enough_times():
    with pytest.raises(ValueError):
        character_poly(Partition([2, 2]), 3)
