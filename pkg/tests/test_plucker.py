import random
from fractions import Fraction

import pytest

from dwkp.determinant import c_lambda
from dwkp.partitions import Partition, enumerate_box, frobenius, partition_from_hooks
from dwkp.plucker import (
    GammaBasis,
    admissible_multi_hook,
    admissible_two_hook,
    c_of,
    columns_of,
    hook_sigma_sequence,
    laplace_plucker,
    minor,
    multi_hook_relation,
    multi_hook_terms,
    partition_of_columns,
    plucker_terms,
    same_relation,
    sigma_sequence,
    two_hook_relation,
    two_hook_terms,
)
from dwkp.sixvertex import random_point


def basis(N, seed=0):
    p = random_point(N, random.Random(seed))
    return GammaBasis(p.v, p.q)


def test_gamma_entries_finite_at_q_one():
    b = GammaBasis([Fraction(2), Fraction(3), Fraction(5)], 1)
    for col in range(-3, 9):
        assert len(b.gamma(col)) == 3


def test_minor_examples():
    b = basis(3)
    assert minor([1, 2, 3], b) == c_of([], b)
    assert minor([1, 1, 3], b) == 0
    assert minor([1, 4, 5], b) == c_of([2, 2], b)
    assert minor([4, 1, 5], b) == -c_of([2, 2], b)
    assert columns_of([2, 2], 3) == [1, 4, 5]


def test_partition_of_columns():
    assert partition_of_columns([5, 1, 4]) == (1, Partition([2, 2]))
    assert partition_of_columns([4, 1, 5]) == (-1, Partition([2, 2]))
    assert partition_of_columns([2, 2, 3]) == (0, None)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_minor_equals_c_lambda(N):
    b = basis(N, seed=N)
    for lam in enumerate_box(N):
        assert c_of(lam, b) == c_lambda(lam, b.v, b.q)


def test_laplace_examples_n3():
    b = basis(3, seed=4)
    for mus in ([1, 4], [2, 4], [3, 4]):
        assert laplace_plucker(mus, [5, 1, 2, 3], b) == 0


def test_laplace_examples_give_the_n3_relations():
    d = lambda lam: Partition(lam)
    phi = Partition()
    assert same_relation(
        plucker_terms([1, 4], [5, 1, 2, 3], 3),
        {(d([1, 1]), d([2])): 1, (d([1]), d([2, 1])): -1, (phi, d([2, 2])): 1},
    )
    assert same_relation(
        plucker_terms([2, 4], [5, 1, 2, 3], 3),
        {(d([1]), d([2, 1, 1])): 1, (d([1, 1, 1]), d([2])): -1, (phi, d([2, 2, 1])): -1},
    )
    assert same_relation(
        plucker_terms([3, 4], [5, 1, 2, 3], 3),
        {(d([1, 1, 1]), d([2, 1])): 1, (d([1, 1]), d([2, 1, 1])): -1, (phi, d([2, 2, 2])): 1},
    )


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_laplace_fuzz(N):
    rng = random.Random(N)
    b = basis(N, seed=N)
    for _ in range(100):
        mus = [rng.randint(-2, 2 * N + 3) for _ in range(N - 1)]
        nus = [rng.randint(-2, 2 * N + 3) for _ in range(N + 1)]
        assert laplace_plucker(mus, nus, b) == 0


def test_sigma_sequence_example():
    assert sigma_sequence([2, 2], 3) == ([1, 4], [5, 1, 2, 3])
    assert hook_sigma_sequence([1, 0], [2, 1], 3) == ([1, 4], [5, 1, 2, 3])


def test_two_hook_n3_cases():
    assert two_hook_terms(1, 0, 2, 1)[(Partition(), Partition([2, 2]))] == -1
    assert partition_from_hooks([1, 0], [3, 1]) == Partition([2, 2, 1])
    assert partition_from_hooks([1, 0], [3, 2]) == Partition([2, 2, 2])
    b = basis(3, seed=2)
    for h in [(1, 0, 2, 1), (1, 0, 3, 1), (1, 0, 3, 2)]:
        assert two_hook_relation(*h, b)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_two_hook_relations(N):
    bases = [basis(N, seed=s) for s in range(3)]
    for h in admissible_two_hook(N):
        assert all(two_hook_relation(*h, b) for b in bases), h
        mus, nus = hook_sigma_sequence(h[:2], h[2:], N)
        assert same_relation(plucker_terms(mus, nus, N), two_hook_terms(*h)), h


def test_two_hook_range_errors():
    b = basis(3)
    with pytest.raises(ValueError):
        two_hook_relation(2, 0, 2, 1, b)
    with pytest.raises(ValueError):
        two_hook_relation(0, 1, 2, 1, b)
    with pytest.raises(ValueError):
        two_hook_relation(1, 0, 4, 1, b)


def test_multi_hook_degenerates_to_two_hook():
    for N in (3, 4):
        for a1, a2, b1, b2 in admissible_two_hook(N):
            assert same_relation(multi_hook_terms([a1, a2], [b1, b2]), two_hook_terms(a1, a2, b1, b2))


@pytest.mark.parametrize("N,size", [(4, 3), (5, 3), (5, 4)])
def test_multi_hook_relations(N, size):
    bases = [basis(N, seed=s) for s in range(3)]
    tuples = list(admissible_multi_hook(N, size))
    assert tuples
    for a, bl in tuples:
        assert all(multi_hook_relation(a, bl, b) for b in bases), (a, bl)
        assert same_relation(plucker_terms(*hook_sigma_sequence(a, bl, N), N), multi_hook_terms(a, bl))


def test_multi_hook_ordering_errors():
    b = basis(4)
    with pytest.raises(ValueError):
        multi_hook_relation([0, 1], [2, 1], b)
    with pytest.raises(ValueError):
        multi_hook_relation([1, 0], [1, 2], b)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_sigma_sequence_matches_hook_construction(N):
    for lam in enumerate_box(N):
        fd = frobenius(lam)
        if fd.d >= 2:
            seq = sigma_sequence(lam, N)
            assert seq == hook_sigma_sequence(fd.a_parts, fd.b_parts, N)
