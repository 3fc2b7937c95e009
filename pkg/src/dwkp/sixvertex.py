"""Six-vertex model on an N x N lattice with domain wall boundaries.

Rapidities enter through square roots of the exponentials, ``s_i = e^{x_i}``,
``t_j = e^{y_j}``, ``r = e^{-mu}``, so every vertex weight is rational::

    w_a = sinh(-x_i + y_j + mu) = (t_j^2 - r^2 s_i^2) / (2 r s_i t_j)
    w_b = sinh(-x_i + y_j)      = (t_j^2 - s_i^2) / (2 s_i t_j)
    w_c = sinh(mu)              = (1 - r^2) / (2 r)

Arrow conventions: a horizontal edge is ``R`` (along the line orientation,
left to right) or ``L``; a vertical edge is ``U`` (along the line, bottom to
top) or ``D``. Row 1 is the top row.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .kernel import as_rational, degree_by_interpolation

__all__ = [
    "RapidityPoint",
    "DWConfiguration",
    "random_point",
    "enumerate_dwbc",
    "count_dwbc",
    "vertex_weight",
    "z_bruteforce",
    "KorepinReport",
    "check_korepin",
    "MAX_BRUTE_N",
]

MAX_BRUTE_N = 7


@dataclass(frozen=True)
class RapidityPoint:
    """Spectral data ``(s, t, r)``; ``u = s^2``, ``v = t^2``, ``q = r^2``."""

    s: tuple[Fraction, ...]
    tt: tuple[Fraction, ...]
    r: Fraction

    def __init__(self, s: Sequence, tt: Sequence, r):
        s = tuple(as_rational(x) for x in s)
        tt = tuple(as_rational(x) for x in tt)
        r = as_rational(r)
        if len(s) != len(tt):
            raise ValueError(f"need as many row rapidities as column rapidities ({len(s)} vs {len(tt)})")
        if not s:
            raise ValueError("empty rapidity lists")
        if r == 0 or any(x == 0 for x in s + tt):
            raise ZeroDivisionError("rapidity exponentials must be nonzero")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "tt", tt)
        object.__setattr__(self, "r", r)

    @property
    def N(self) -> int:
        return len(self.s)

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(x * x for x in self.s)

    @property
    def v(self) -> tuple[Fraction, ...]:
        return tuple(x * x for x in self.tt)

    @property
    def q(self) -> Fraction:
        return self.r * self.r

    def replace(self, s=None, tt=None, r=None) -> "RapidityPoint":
        return RapidityPoint(
            self.s if s is None else s, self.tt if tt is None else tt, self.r if r is None else r
        )

    def drop_first(self) -> "RapidityPoint":
        """Remove ``x_1`` and ``y_1``."""
        return RapidityPoint(self.s[1:], self.tt[1:], self.r)

    def singular_pair(self) -> str | None:
        """Describe the first coincidence that makes the Izergin formula singular."""
        u, v, q = self.u, self.v, self.q
        N = self.N
        for i in range(N):
            for j in range(i + 1, N):
                if u[i] == u[j]:
                    return f"u_{i + 1} = u_{j + 1}"
                if v[i] == v[j]:
                    return f"v_{i + 1} = v_{j + 1}"
        for i in range(N):
            for j in range(N):
                if u[i] == v[j]:
                    return f"u_{i + 1} = v_{j + 1}"
                if q * u[i] == v[j]:
                    return f"q u_{i + 1} = v_{j + 1}"
        return None

    def to_json(self) -> dict:
        return {"s": [str(x) for x in self.s], "t": [str(x) for x in self.tt], "r": str(self.r)}


def _random_positive(rng: random.Random, max_num: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_point(N: int, rng: random.Random, max_num: int = 50, max_den: int = 20) -> RapidityPoint:
    """Draw a generic point: numerators in [1, max_num], denominators in [1, max_den].

    Rejects coinciding u's or v's, u_i = v_j, q u_i = v_j and q = 1.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    while True:
        r = _random_positive(rng, max_num, max_den)
        if r == 1:
            continue
        s = [_random_positive(rng, max_num, max_den) for _ in range(N)]
        t = [_random_positive(rng, max_num, max_den) for _ in range(N)]
        p = RapidityPoint(s, t, r)
        if p.singular_pair() is None:
            return p


# -- configurations ------------------------------------------------------------

# vertex kinds: (left, right, bottom, top) edge states
_KINDS = {
    ("R", "R", "U", "U"): "a1",
    ("L", "L", "D", "D"): "a2",
    ("L", "L", "U", "U"): "b1",
    ("R", "R", "D", "D"): "b2",
    ("R", "L", "D", "U"): "c1",  # horizontal arrows in, vertical out
    ("L", "R", "U", "D"): "c2",  # horizontal arrows out, vertical in
}


@dataclass(frozen=True)
class DWConfiguration:
    """Vertex kinds ``a1, a2, b1, b2, c1, c2`` on the N x N grid (row 1 on top)."""

    kinds: tuple[tuple[str, ...], ...]

    @property
    def N(self) -> int:
        return len(self.kinds)

    def weight_class(self, i: int, j: int) -> str:
        return self.kinds[i][j][0]

    def asm(self) -> list[list[int]]:
        """Alternating sign matrix: +1 at c1 vertices, -1 at c2, 0 elsewhere."""
        val = {"c1": 1, "c2": -1}
        return [[val.get(k, 0) for k in row] for row in self.kinds]

    def to_json(self) -> list[list[int]]:
        return self.asm()


def enumerate_dwbc(N: int) -> list[DWConfiguration]:
    """All domain-wall configurations, by backtracking column by column.

    The sweep state is the column of N horizontal edges to the left of the
    current column: all ``R`` on the left boundary, all ``L`` on the right.
    """
    if not 1 <= N <= MAX_BRUTE_N:
        raise ValueError(f"N must be in 1..{MAX_BRUTE_N}, got {N}")
    return [DWConfiguration(k) for k in _enumerate(N)]


@lru_cache(maxsize=None)
def _enumerate(N: int) -> tuple:
    found = []
    grid = [[None] * N for _ in range(N)]

    def column(j: int, left: tuple):
        if j == N:
            if all(h == "L" for h in left):
                found.append(tuple(tuple(row) for row in grid))
            return
        cell(j, 0, left, "U", [])

    def cell(j, i, left, top, right_acc):
        if i == N:
            if top == "D":
                column(j + 1, tuple(right_acc))
            return
        h = left[i]
        for right in ("R", "L"):
            ins = (h == "R") + (right == "L") + (top == "D")
            # bottom edge is fixed by the ice rule (two arrows in, two out)
            need = 2 - ins
            if need not in (0, 1):
                continue
            bottom = "U" if need == 1 else "D"
            grid[i][j] = _KINDS[(h, right, bottom, top)]
            right_acc.append(right)
            # the vertex below sees this bottom edge as its top edge
            cell(j, i + 1, left, bottom, right_acc)
            right_acc.pop()
        grid[i][j] = None

    column(0, ("R",) * N)
    return tuple(found)


def count_dwbc(N: int) -> int:
    if not 1 <= N <= MAX_BRUTE_N:
        raise ValueError(f"N must be in 1..{MAX_BRUTE_N}, got {N}")
    return len(_enumerate(N))


# -- weights -------------------------------------------------------------------


def vertex_weight(kind: str, i: int, j: int, p: RapidityPoint) -> Fraction:
    """Weight of an ``a``, ``b`` or ``c`` vertex at row ``i``, column ``j`` (0-based)."""
    s, t, r = p.s[i], p.tt[j], p.r
    kind = kind[0]
    if kind == "a":
        return (t * t - r * r * s * s) / (2 * r * s * t)
    if kind == "b":
        return (t * t - s * s) / (2 * s * t)
    if kind == "c":
        return (1 - r * r) / (2 * r)
    raise ValueError(f"unknown vertex kind {kind!r}")


def z_bruteforce(p: RapidityPoint) -> Fraction:
    """Sum over all domain-wall configurations of the product of vertex weights."""
    N = p.N
    configs = enumerate_dwbc(N)
    table = {
        k: [[vertex_weight(k, i, j, p) for j in range(N)] for i in range(N)] for k in "abc"
    }
    total = Fraction(0)
    for conf in configs:
        w = Fraction(1)
        for i, row in enumerate(conf.kinds):
            for j, kind in enumerate(row):
                w *= table[kind[0]][i][j]
        total += w
    return total


# -- Korepin's conditions ------------------------------------------------------


@dataclass
class KorepinReport:
    N: int
    symmetric: bool
    degree: bool
    recursion: bool
    initial: bool
    details: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return self.symmetric and self.degree and self.recursion and self.initial

    def checks(self) -> list[tuple[str, bool]]:
        return [
            ("korepin-1-symmetry", self.symmetric),
            ("korepin-2-degree", self.degree),
            ("korepin-3-recursion", self.recursion),
            ("korepin-4-initial", self.initial),
        ]


def _recursion_holds(p: RapidityPoint) -> bool:
    N = p.N
    if N == 1:
        return True
    r = p.r
    s = list(p.s)
    s[0] = p.tt[0] / r  # x_1 = y_1 + mu
    pt = p.replace(s=s)
    rhs = vertex_weight("c", 0, 0, pt)
    for i in range(1, N):
        rhs *= vertex_weight("b", i, 0, pt)
    for j in range(1, N):
        rhs *= vertex_weight("b", 0, j, pt)
    return z_bruteforce(pt) == rhs * z_bruteforce(pt.drop_first())


def _degree_holds(p: RapidityPoint, which: str) -> bool:
    N = p.N
    samples = []
    base = p.s[0] if which == "s" else p.tt[0]
    for k in range(N + 2):
        x = base + Fraction(k, 7)
        if which == "s":
            pt = p.replace(s=(x,) + p.s[1:])
        else:
            pt = p.replace(tt=(x,) + p.tt[1:])
        samples.append((x * x, x ** (N - 1) * z_bruteforce(pt)))
    return degree_by_interpolation(samples, N - 1)


def check_korepin(
    N: int, sample_points: Sequence[RapidityPoint], rng: random.Random | None = None,
    permutations: int = 5,
) -> KorepinReport:
    """Test Korepin's four conditions on ``z_bruteforce`` at the given points.

    1. invariance under random permutations of the s's and of the t's;
    2. ``s_1^{N-1} Z_N`` is a polynomial of degree N-1 in ``u_1`` (likewise in ``v_1``);
    3. the recursion at ``s_1 = t_1 / r`` against ``Z_{N-1}``;
    4. ``Z_1 = (1 - r^2) / (2 r)``.
    """
    if not 1 <= N <= 6:
        raise ValueError(f"Korepin checks run for 1 <= N <= 6, got {N}")
    rng = rng or random.Random(0)
    sym = deg = rec = init = True
    for p in sample_points:
        if p.N != N:
            raise ValueError(f"sample point has N={p.N}, expected {N}")
        z = z_bruteforce(p)
        for _ in range(permutations):
            s = list(p.s)
            t = list(p.tt)
            rng.shuffle(s)
            rng.shuffle(t)
            sym &= z_bruteforce(p.replace(s=s)) == z and z_bruteforce(p.replace(tt=t)) == z
        deg &= _degree_holds(p, "s") and _degree_holds(p, "t")
        rec &= _recursion_holds(p)
        single = RapidityPoint(p.s[:1], p.tt[:1], p.r)
        init &= z_bruteforce(single) == (1 - p.r * p.r) / (2 * p.r)
    return KorepinReport(N, sym, deg, rec, init, {"points": len(sample_points)})
