"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction`. Polynomials in the time variables
``t_1 .. t_M`` are :class:`TPoly` objects: immutable sparse maps from dense
exponent tuples to Fraction coefficients.
"""
from __future__ import annotations

import json
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "TPoly",
    "as_rational",
    "format_rational",
    "parse_rational",
    "det_exact",
    "interpolate",
    "degree_by_interpolation",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rationals must be written as p/q, got {text!r}")
    return Fraction(text)


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class TPoly:
    """Sparse polynomial over the rationals in ``nvars`` time variables.

    Terms are stored as ``{exponent tuple: coefficient}``. Zero coefficients
    are never stored, so two polynomials are equal iff their term maps are.

    >>> t1 = TPoly.variable(1, 2)
    >>> (t1 * t1 + 1).dumps()
    '[{"exponents": [0, 0], "coeff": "1"}, {"exponents": [2, 0], "coeff": "1"}]'
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None, nvars: int = 0):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent vector {exps} does not have length {nvars}")
                if c:
                    clean[tuple(exps)] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "TPoly":
        # terms already validated and zero-free
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c, nvars: int) -> "TPoly":
        c = as_rational(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars)

    @classmethod
    def zero(cls, nvars: int) -> "TPoly":
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "TPoly":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, n: int, nvars: int) -> "TPoly":
        """The polynomial ``t_n`` (1-based)."""
        if not 1 <= n <= nvars:
            raise ValueError(f"t_{n} is not among t_1..t_{nvars}")
        exps = [0] * nvars
        exps[n - 1] = 1
        return cls._raw({tuple(exps): Fraction(1)}, nvars)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def weighted_degree(self) -> int:
        """max over terms of sum n * (exponent of t_n); -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum((n + 1) * e for n, e in enumerate(exps)) for exps in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exps) for exps in self._terms)

    def is_weighted_homogeneous(self, degree: int) -> bool:
        return all(sum((n + 1) * e for n, e in enumerate(exps)) == degree for exps in self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "TPoly":
        if isinstance(other, TPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"mixing polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return TPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return TPoly._raw(terms, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return TPoly.zero(self.nvars)
            return TPoly._raw({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return TPoly._raw({e: c for e, c in terms.items() if c}, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        if isinstance(other, TPoly):
            return self.divexact(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = TPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divexact(self, other: "TPoly") -> "TPoly":
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = max(other._terms.items(), key=lambda kv: _grlex_key(kv[0]))
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            e, c = max(rem.items(), key=lambda kv: _grlex_key(kv[0]))
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if any(s < 0 for s in shift):
                raise ArithmeticError("polynomial division is not exact")
            f = c / lead_c
            quot[shift] = f
            for oe, oc in other._terms.items():
                k = tuple(a + b for a, b in zip(oe, shift))
                v = rem.get(k, 0) - f * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return TPoly._raw(quot, self.nvars)

    def negate_times(self) -> "TPoly":
        """The polynomial p(-t): every t_j replaced by -t_j."""
        return TPoly._raw(
            {e: (-c if sum(e) % 2 else c) for e, c in self._terms.items()}, self.nvars
        )

    def evaluate(self, values: Sequence) -> Fraction:
        """Substitute ``t_n = values[n-1]``; values may be longer than nvars."""
        if len(values) < self.nvars and not all(
            all(e == 0 for e in exps[len(values):]) for exps in self._terms
        ):
            raise ValueError(f"need {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(values, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def with_nvars(self, nvars: int) -> "TPoly":
        """Re-embed into a ring with more (or fewer, if unused) variables."""
        if nvars >= self.nvars:
            pad = (0,) * (nvars - self.nvars)
            return TPoly._raw({e + pad: c for e, c in self._terms.items()}, nvars)
        if any(any(e[nvars:]) for e in self._terms):
            raise ValueError(f"polynomial uses variables beyond t_{nvars}")
        return TPoly._raw({e[:nvars]: c for e, c in self._terms.items()}, nvars)

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == TPoly.constant(other, self.nvars)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "TPoly(0)"
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                f"t{n + 1}" + (f"^{e}" if e > 1 else "") for n, e in enumerate(exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return "TPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coeff": format_rational(c)} for exps, c in self.items()
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Iterable[Mapping], nvars: int | None = None) -> "TPoly":
        data = list(data)
        if nvars is None:
            if not data:
                raise ValueError("cannot infer nvars from an empty term list")
            nvars = len(data[0]["exponents"])
        terms: dict = {}
        for item in data:
            exps = tuple(int(e) for e in item["exponents"])
            terms[exps] = terms.get(exps, 0) + parse_rational(str(item["coeff"]))
        return cls(terms, nvars)


# -- determinants -----------------------------------------------------------


def _check_square(m) -> int:
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    for row in m:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def _cofactor_det(m, n):
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    raise AssertionError


def _is_zero(x) -> bool:
    return not x


def det_exact(m: Sequence[Sequence]):
    """Exact determinant of a square matrix of Fractions, ints or TPolys.

    Sizes below 4 use cofactor expansion; larger matrices use Bareiss
    fraction-free elimination, whose divisions are always exact.
    """
    n = _check_square(m)
    if n < 4:
        return _cofactor_det(m, n)
    a = [list(row) for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[k][k] * 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else _exact_div(num, prev)
            a[i][k] = a[i][k] * 0
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _exact_div(a, b):
    if isinstance(a, TPoly):
        if isinstance(b, TPoly):
            return a.divexact(b)
        return a * (Fraction(1) / b)
    if isinstance(b, TPoly):
        return TPoly.constant(a, b.nvars).divexact(b)
    return Fraction(a) / b


def det_leibniz(m: Sequence[Sequence]):
    """Permutation-sum determinant; only for cross-checking small matrices."""
    n = _check_square(m)
    total = m[0][0] * 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, p in enumerate(perm):
            term = term * m[i][p]
        total = total + (-term if inv % 2 else term)
    return total


# -- interpolation ----------------------------------------------------------


def interpolate(samples: Sequence[tuple], x) -> Fraction:
    """Evaluate at ``x`` the Lagrange interpolant through ``samples``."""
    nodes = [as_rational(s[0]) for s in samples]
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be pairwise distinct")
    x = as_rational(x)
    total = Fraction(0)
    for i, (xi, yi) in enumerate(samples):
        term = as_rational(yi)
        for j, xj in enumerate(nodes):
            if j != i:
                term = term * (x - xj) / (nodes[i] - xj)
        total += term
    return total


def degree_by_interpolation(samples: Sequence[tuple], claimed_degree: int) -> bool:
    """True iff the samples lie on a polynomial of degree <= claimed_degree.

    The interpolant through the first ``claimed_degree + 1`` samples must
    reproduce every remaining sample exactly.
    """
    nodes = [as_rational(s[0]) for s in samples]
    if len(set(nodes)) != len(nodes):
        raise ValueError("duplicate interpolation nodes")
    if claimed_degree < 0:
        raise ValueError("claimed degree must be non-negative")
    if len(samples) < claimed_degree + 2:
        raise ValueError(
            f"need at least {claimed_degree + 2} samples to test degree {claimed_degree}"
        )
    base = samples[: claimed_degree + 1]
    return all(interpolate(base, x) == as_rational(y) for x, y in samples[claimed_degree + 1 :])

