import pytest
from hypothesis import given, strategies as st

from dwkp.partitions import (
    Partition,
    enumerate_box,
    frobenius,
    hook_data,
    hook_partition,
    partition_from_hooks,
)

partitions = st.lists(st.integers(0, 8), max_size=8).map(lambda xs: Partition(sorted(xs, reverse=True)))
strict = st.lists(st.integers(0, 8), min_size=1, max_size=5, unique=True).map(lambda xs: sorted(xs, reverse=True))


def test_partition_basics():
    lam = Partition([4, 3, 3, 2, 0, 0])
    assert lam.parts == (4, 3, 3, 2)
    assert lam.weight == 12
    assert lam.part(5) == 0
    assert lam.padded(6) == (4, 3, 3, 2, 0, 0)
    assert lam.conjugate() == Partition([4, 4, 3, 1])
    assert lam.to_json() == [4, 3, 3, 2]


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_frobenius_examples():
    fd = frobenius([4, 3, 3, 2])
    assert fd.d == 3
    assert fd.a_parts == (3, 1, 0)
    assert fd.b_parts == (4, 3, 1)
    empty = frobenius([])
    assert empty.d == 0 and empty.m == () and empty.n == ()


def test_hook_data_examples():
    assert hook_data([2, 2, 2], (2, 1))[1:] == (1, 2)
    assert hook_data([2, 2, 2], (1, 1))[1:] == (1, 3)
    h = hook_data([1], (1, 1))
    assert (h.a_len, h.b_len, h.length) == (0, 1, 1)
    with pytest.raises(IndexError):
        hook_data([2, 1], (2, 2))


def test_hook_partition_examples():
    assert hook_partition(1, 1) == Partition([2])
    assert hook_partition(0, 3) == Partition([1, 1, 1])
    assert hook_partition(0, 1) == Partition([1])
    with pytest.raises(ValueError):
        hook_partition(0, 0)


def test_partition_from_hooks_examples():
    assert partition_from_hooks([3, 1, 0], [4, 3, 1]) == Partition([4, 3, 3, 2])
    assert partition_from_hooks([1], [2]) == Partition([2, 1])
    a1, a2, b1, b2 = 5, 2, 6, 3
    expected = [a1 + 1, a2 + 2] + [2] * (b2 - 1) + [1] * (b1 - b2 - 1)
    assert partition_from_hooks([a1, a2], [b1, b2]) == Partition(expected)
    with pytest.raises(ValueError):
        partition_from_hooks([1, 1], [3, 2])


def test_enumerate_box():
    assert enumerate_box(1) == [Partition()]
    assert len(enumerate_box(3)) == 10
    assert len(enumerate_box(4)) == 35
    assert enumerate_box(2) == [Partition([1, 1]), Partition([1]), Partition()]
    assert all(lam.fits_in_box(3, 2) for lam in enumerate_box(3))
    with pytest.raises(ValueError):
        enumerate_box(0)


@given(strict, strict)
def test_frobenius_round_trip(a, b):
    k = min(len(a), len(b))
    a = a[:k]
    b = [x + 1 for x in b[:k]]
    fd = frobenius(partition_from_hooks(a, b))
    assert list(fd.a_parts) == a and list(fd.b_parts) == b


@given(partitions)
def test_conjugation_involution_swaps_frobenius(lam):
    assert lam.conjugate().conjugate() == lam
    fd, fc = frobenius(lam), frobenius(lam.conjugate())
    assert fc.a_parts == tuple(b - 1 for b in fd.b_parts)


@pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
def test_diagonal_hooks_add_up_to_weight(N):
    for lam in enumerate_box(N):
        fd = frobenius(lam)
        assert sum(fd.a_parts) + sum(fd.b_parts) == lam.weight


@given(partitions)
def test_hook_lengths(lam):
    for cell in lam.cells():
        h = hook_data(lam, cell)
        assert h.a_len >= 0 and h.b_len >= 1
        assert h.length == h.a_len + h.b_len
