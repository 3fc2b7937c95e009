"""Charged free fermions on the semi-infinite wedge.

A basis state is the ordered wedge ``s_1 ^ s_2 ^ ...`` of its occupied modes,
``s_1 > s_2 > ...``, which agree with the Dirac sea ``{-1, -2, ...}`` far
down. :class:`MayaState` stores only the difference from the sea. With this
basis::

    psi_j   |S> = (-1)^{#(s in S, s > j)} |S + {j}>    (0 if j in S)
    psi*_j  |S> = (-1)^{#(s in S, s > j)} |S - {j}>    (0 if j not in S)

which realises the anticommutation relations, ``psi_m |0> = 0`` for
``m < 0`` and ``psi*_n |0> = 0`` for ``n >= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .determinant import CoefficientTable, c_prefactor, coefficient_table, kappa_closed_form, time_count, z_free
from .kernel import TPoly, as_rational
from .partitions import Partition, enumerate_box, frobenius, hook_partition
from .sixvertex import RapidityPoint, z_bruteforce
from .symmetric import power_sums

__all__ = [
    "MayaState",
    "VACUUM",
    "FockVector",
    "apply_psi",
    "apply_psi_star",
    "apply_Hm",
    "vacuum_pairing",
    "pairing_at",
    "monomial_state",
    "BilinearOperator",
    "x_operator",
    "fermionic_state",
    "f_free",
    "f_free_at",
    "monomial_expansion",
    "MainReport",
    "verify_main",
]


@dataclass(frozen=True, order=True)
class MayaState:
    """Occupied modes added above the sea (``>= 0``) and sea modes removed (``<= -1``)."""

    added: tuple[int, ...] = ()
    removed: tuple[int, ...] = ()

    def __post_init__(self):
        a, r = self.added, self.removed
        if any(x < 0 for x in a) or any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
            raise ValueError(f"added modes must be strictly decreasing and >= 0: {a}")
        if any(x >= 0 for x in r) or any(r[i] <= r[i + 1] for i in range(len(r) - 1)):
            raise ValueError(f"removed modes must be strictly decreasing and <= -1: {r}")

    @property
    def charge(self) -> int:
        return len(self.added) - len(self.removed)

    @property
    def energy(self) -> int:
        return sum(self.added) - sum(self.removed)

    def occupied(self, j: int) -> bool:
        return j in self.added if j >= 0 else j not in self.removed

    def _above(self, j: int) -> int:
        if j >= 0:
            return sum(1 for a in self.added if a > j)
        return len(self.added) + (-1 - j) - sum(1 for r in self.removed if r > j)

    def _window(self) -> tuple[int, int]:
        lo = self.removed[-1] if self.removed else 0
        hi = self.added[0] if self.added else -1
        return lo, hi

    def _with(self, j: int) -> "MayaState":
        if j >= 0:
            return MayaState(tuple(sorted(self.added + (j,), reverse=True)), self.removed)
        return MayaState(self.added, tuple(x for x in self.removed if x != j))

    def _without(self, j: int) -> "MayaState":
        if j >= 0:
            return MayaState(tuple(x for x in self.added if x != j), self.removed)
        return MayaState(self.added, tuple(sorted(self.removed + (j,), reverse=True)))

    @classmethod
    def from_partition(cls, lam) -> "MayaState":
        """The charge-0 state with occupied modes ``lam_i - i``."""
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        n = len(lam) + 1
        occ = {lam.part(i) - i for i in range(1, n + 1)}
        added = tuple(sorted((x for x in occ if x >= 0), reverse=True))
        removed = tuple(x for x in range(-1, -n - 1, -1) if x not in occ)
        return cls(added, removed)

    def to_partition(self) -> Partition:
        if self.charge != 0:
            raise ValueError("only charge-0 states correspond to partitions")
        depth = len(self.removed) and -self.removed[-1]
        occ = sorted(
            list(self.added) + [j for j in range(-1, -depth - 2, -1) if j not in self.removed],
            reverse=True,
        )
        return Partition(s + i for i, s in enumerate(occ, start=1))


VACUUM = MayaState()


def _psi(state: MayaState, j: int):
    if state.occupied(j):
        return None
    return (-1 if state._above(j) % 2 else 1), state._with(j)


def _psi_star(state: MayaState, j: int):
    if not state.occupied(j):
        return None
    return (-1 if state._above(j) % 2 else 1), state._without(j)


class FockVector:
    """Finite linear combination of :class:`MayaState` basis vectors.

    Coefficients are Fractions, or TPolys inside :func:`vacuum_pairing`.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[MayaState, object] | None = None):
        self._c = {s: c for s, c in (coeffs or {}).items() if c}

    @classmethod
    def basis(cls, state: MayaState = VACUUM, coeff=1) -> "FockVector":
        return cls({state: as_rational(coeff) if isinstance(coeff, int) else coeff})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls.basis(VACUUM)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (kv[0].energy, kv[0]))

    def states(self) -> list[MayaState]:
        return [s for s, _ in self.items()]

    def coefficient(self, state: MayaState):
        return self._c.get(state, 0)

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def _accumulate(self, pairs: Iterable[tuple[MayaState, object]]) -> "FockVector":
        out: dict = {}
        for s, c in pairs:
            if s in out:
                out[s] = out[s] + c
            else:
                out[s] = c
        return FockVector(out)

    def __add__(self, other: "FockVector") -> "FockVector":
        return self._accumulate(list(self._c.items()) + list(other._c.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other * -1

    def __mul__(self, x) -> "FockVector":
        return FockVector({s: c * x for s, c in self._c.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._c == other._c

    def __repr__(self):
        body = ", ".join(f"{c}*{s}" for s, c in self.items())
        return f"FockVector({body})"

    def max_energy(self) -> int:
        return max((s.energy for s in self._c), default=0)

    def charges(self) -> set[int]:
        return {s.charge for s in self._c}


def apply_psi(n: int, v: FockVector) -> FockVector:
    pairs = []
    for s, c in v._c.items():
        hit = _psi(s, n)
        if hit:
            pairs.append((hit[1], c if hit[0] > 0 else -c))
    return v._accumulate(pairs)


def apply_psi_star(n: int, v: FockVector) -> FockVector:
    pairs = []
    for s, c in v._c.items():
        hit = _psi_star(s, n)
        if hit:
            pairs.append((hit[1], c if hit[0] > 0 else -c))
    return v._accumulate(pairs)


def _bilinear_on_state(state: MayaState, j: int, k: int):
    """``psi_j psi*_k |state>`` as (sign, state) or None."""
    first = _psi_star(state, k)
    if first is None:
        return None
    second = _psi(first[1], j)
    if second is None:
        return None
    return first[0] * second[0], second[1]


def apply_Hm(m: int, v: FockVector) -> FockVector:
    """``H_m = sum_j :psi_j psi*_{j+m}:``.

    Only modes within ``|m|`` of the non-trivial window of a state contribute;
    below it both modes are filled, above it both are empty.
    """
    if m == 0:
        return v._accumulate((s, c * s.charge) for s, c in v._c.items())
    pairs = []
    for s, c in v._c.items():
        lo, hi = s._window()
        for j in range(lo - abs(m), hi + abs(m) + 1):
            hit = _bilinear_on_state(s, j, j + m)
            if hit:
                pairs.append((hit[1], c if hit[0] > 0 else -c))
    return v._accumulate(pairs)


def _pair(v: FockVector, times: Sequence) -> object:
    """Vacuum coefficient of ``prod_m exp(t_m H_m) v`` with ``times[m-1] = t_m``."""
    if v.charges() - {0}:
        raise ValueError(f"vacuum pairing needs charge 0, got charges {sorted(v.charges())}")
    need = v.max_energy()
    if len(times) < need:
        raise ValueError(f"state energy {need} needs {need} time variables, have {len(times)}")
    acc = v
    for m in range(need, 0, -1):
        tm = times[m - 1]
        term = acc
        k = 0
        while True:
            k += 1
            term = apply_Hm(m, term) * tm * Fraction(1, k)
            if not term:
                break
            acc = acc + term
    return acc.coefficient(VACUUM)


def vacuum_pairing(v: FockVector, M: int | None = None) -> TPoly:
    """``<0| exp(sum_m t_m H_m) |v>`` as a polynomial in ``t_1..t_M``.

    The H_m commute and lower the energy by m, so the exponential is applied
    one mode at a time and terminates once the energy is exhausted.
    """
    if M is None:
        M = max(v.max_energy(), 1)
    coeffs = FockVector({s: TPoly.constant(c, M) for s, c in v._c.items()})
    out = _pair(coeffs, [TPoly.variable(m, M) for m in range(1, M + 1)])
    return out if isinstance(out, TPoly) else TPoly.constant(out, M)


def pairing_at(v: FockVector, times: Sequence) -> Fraction:
    """``<0| exp(H(t)) |v>`` at numeric times."""
    out = _pair(v, [as_rational(t) for t in times])
    return as_rational(out) if not isinstance(out, Fraction) else out


def monomial_state(lam) -> FockVector:
    """``psi*_{-b_1} ... psi*_{-b_d} psi_{a_d} ... psi_{a_1} |0>`` for lambda's hooks."""
    fd = frobenius(lam)
    v = FockVector.vacuum()
    for a in fd.a_parts:
        v = apply_psi(a, v)
    for b in reversed(fd.b_parts):
        v = apply_psi_star(-b, v)
    return v


@dataclass(frozen=True)
class BilinearOperator:
    """``sum coeff * psi*_{-b} psi_a`` over ``(coeff, b, a)`` terms."""

    terms: tuple[tuple[Fraction, int, int], ...]

    def apply(self, v: FockVector) -> FockVector:
        out = FockVector()
        for coeff, b, a in self.terms:
            if coeff:
                out = out + apply_psi_star(-b, apply_psi(a, v)) * coeff
        return out

    def exp_apply(self, v: FockVector) -> FockVector:
        """``(1 + X) v``: every term ends in ``psi_a`` with the same ``a``, so X^2 = 0."""
        return v + self.apply(v)


def x_operator(a: int, table: CoefficientTable) -> BilinearOperator:
    """``X_a = sum_{b=1}^N (-1)^b d_{[a+1, 1^(b-1)]} psi*_{-b} psi_a``."""
    N = table.N
    if not 0 <= a <= N - 2:
        raise ValueError(f"X_a is defined for 0 <= a <= {N - 2}, got a={a}")
    return BilinearOperator(
        tuple(((-1) ** b * table.d(hook_partition(a, b)), b, a) for b in range(1, N + 1))
    )


def fermionic_state(table: CoefficientTable) -> FockVector:
    """``exp(X_0) exp(X_1) ... exp(X_{N-2}) |0>``."""
    v = FockVector.vacuum()
    for a in range(table.N - 2, -1, -1):
        v = x_operator(a, table).exp_apply(v)
    return v


def monomial_expansion(table: CoefficientTable) -> FockVector:
    """``sum_lambda (-1)^{sum b_i} d_lambda`` times the lambda-ordered monomial state.

    Expanding the product of the N-1 exponentials term by term and reducing
    the products of hook coefficients with the two- and multi-hook relations
    gives exactly this vector.
    """
    out = FockVector()
    for lam in enumerate_box(table.N):
        d = table.d(lam)
        if d:
            sign = -1 if sum(frobenius(lam).b_parts) % 2 else 1
            out = out + monomial_state(lam) * (sign * d)
    return out


def f_free(table: CoefficientTable, M: int | None = None) -> TPoly:
    """``<0| exp(H(t)) exp(X_0) ... exp(X_{N-2}) |0>`` as a polynomial in the times."""
    M = time_count(table.N) if M is None else M
    return vacuum_pairing(fermionic_state(table), M)


def f_free_at(table: CoefficientTable, u: Sequence) -> Fraction:
    """``F_N`` with the times restricted to power sums of ``u``."""
    state = fermionic_state(table)
    return pairing_at(state, power_sums(u, max(state.max_energy(), 1)))


@dataclass
class MainReport:
    N: int
    polynomial_identity: bool | None
    restricted: list[bool] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return self.polynomial_identity is not False and all(self.restricted)


def verify_main(
    v: Sequence, q, points: Sequence[RapidityPoint] = (), polynomial: bool | None = None
) -> MainReport:
    """Check ``c_phi F_N = z_free`` and its restriction against brute force.

    ``points`` must share ``v`` and ``q``; at each one the check is
    ``kappa c_N c_phi F_N(power sums of u) == z_bruteforce``.
    The polynomial comparison defaults to on for N <= 4.
    """
    N = len(v)
    v = tuple(as_rational(x) for x in v)
    q = as_rational(q)
    table = coefficient_table(v, q)
    if polynomial is None:
        polynomial = N <= 4
    poly_ok = None
    F = None
    if polynomial:
        F = f_free(table)
        poly_ok = F * table.c_phi == z_free(v, q, table)
    restricted = []
    for p in points:
        if p.v != v or p.q != q:
            raise ValueError("sample point does not share (v, q) with the identity under test")
        f_u = F.evaluate(power_sums(p.u, F.nvars)) if F is not None else f_free_at(table, p.u)
        lhs = kappa_closed_form(p) * c_prefactor(p) * table.c_phi * f_u
        restricted.append(lhs == z_bruteforce(p))
    return MainReport(N, poly_ok, restricted, {"c_phi": str(table.c_phi)})
