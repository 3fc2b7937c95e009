"""Partitions, hooks and Frobenius coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Partition",
    "FrobeniusData",
    "HookData",
    "frobenius",
    "hook_data",
    "hook_partition",
    "partition_from_hooks",
    "enumerate_box",
]


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive parts.

    Trailing zeros are accepted on construction and stripped, so
    ``Partition([2, 2, 0]) == Partition([2, 2])``.
    """

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """lambda_i with 1-based index, zero past the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def fits_in_box(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def cells(self):
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def to_json(self) -> list[int]:
        return list(self.parts)


class FrobeniusData(NamedTuple):
    """Arms ``m`` and legs ``n`` of the ``d`` diagonal hooks."""

    m: tuple[int, ...]
    n: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.m)

    @property
    def a_parts(self) -> tuple[int, ...]:
        return self.m

    @property
    def b_parts(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.n)


class HookData(NamedTuple):
    cell: tuple[int, int]
    a_len: int
    b_len: int

    @property
    def length(self) -> int:
        return self.a_len + self.b_len


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def frobenius(lam) -> FrobeniusData:
    lam = _as_partition(lam)
    conj = lam.conjugate()
    d = sum(1 for i, p in enumerate(lam.parts, start=1) if p >= i)
    return FrobeniusData(
        tuple(lam.part(i) - i for i in range(1, d + 1)),
        tuple(conj.part(i) - i for i in range(1, d + 1)),
    )


def hook_data(lam, cell: tuple[int, int]) -> HookData:
    """Arm (``a_len``) and corner-plus-leg (``b_len``) lengths of the hook at ``cell``."""
    lam = _as_partition(lam)
    i, j = cell
    if not (i >= 1 and j >= 1 and lam.part(i) >= j):
        raise IndexError(f"cell {cell} is outside the diagram of {lam}")
    return HookData((i, j), lam.part(i) - j, lam.conjugate().part(j) - i + 1)


def hook_partition(a: int, b: int) -> Partition:
    """The single hook ``[a+1, 1^(b-1)]``."""
    if a < 0 or b < 1:
        raise ValueError(f"hook needs a >= 0 and b >= 1, got a={a}, b={b}")
    return Partition([a + 1] + [1] * (b - 1))


def partition_from_hooks(a_list: Sequence[int], b_list: Sequence[int]) -> Partition:
    """Assemble the partition whose diagonal hooks have arms ``a_list`` and
    corner-plus-legs ``b_list`` (both strictly decreasing).

    The result is ``[a_1+1, ..., a_k+k, k^(b_k-1), (k-1)^(b_{k-1}-b_k-1), ..., 1^(b_1-b_2-1)]``.
    """
    a_list, b_list = list(a_list), list(b_list)
    k = len(a_list)
    if len(b_list) != k:
        raise ValueError("need as many a-parts as b-parts")
    if any(a_list[i] <= a_list[i + 1] for i in range(k - 1)) or (k and a_list[-1] < 0):
        raise ValueError(f"a-parts must be strictly decreasing and >= 0: {a_list}")
    if any(b_list[i] <= b_list[i + 1] for i in range(k - 1)) or (k and b_list[-1] < 1):
        raise ValueError(f"b-parts must be strictly decreasing and >= 1: {b_list}")
    parts = [a + i for i, a in enumerate(a_list, start=1)]
    if k:
        parts += [k] * (b_list[k - 1] - 1)
        for j in range(k - 1, 0, -1):
            parts += [j] * (b_list[j - 1] - b_list[j] - 1)
    return Partition(parts)


def _box(rows: int, cols: int, prefix: list[int]):
    if len(prefix) == rows:
        yield Partition(prefix)
        return
    top = prefix[-1] if prefix else cols
    for p in range(top, -1, -1):
        yield from _box(rows, cols, prefix + [p])


def enumerate_box(N: int) -> list[Partition]:
    """All partitions inside the ``N x (N-1)`` rectangle, lexicographically descending."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return list(_box(N, N - 1, []))
