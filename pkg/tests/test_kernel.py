import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dwkp.kernel import (
    TPoly,
    as_rational,
    degree_by_interpolation,
    det_exact,
    det_leibniz,
    format_rational,
    interpolate,
    parse_rational,
)

from conftest import nonzero_rationals, random_fraction, rationals


# -- rationals ------------------------------------------------------------------


def test_rational_parsing_and_formatting():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -6/8 ") == Fraction(-3, 4)
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert as_rational("5/10") == Fraction(1, 2)


@pytest.mark.parametrize("text", ["0.5", "1e3", "abc"])
def test_parse_rational_rejects_inexact(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_rational_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0


@given(nonzero_rationals)
def test_multiplicative_inverse_and_lowest_terms(a):
    assert a * (1 / a) == 1
    from math import gcd

    assert a.denominator > 0 and gcd(a.numerator, a.denominator) == 1


# -- determinants -----------------------------------------------------------------


def test_det_examples():
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_exact([[0, 1], [1, 0]]) == -1
    vandermonde = [[x**k for k in range(4)] for x in (1, 2, 3, 4)]
    assert det_exact(vandermonde) == 12


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_exact([])
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_det_needs_pivoting():
    m = [[0, 0, 1, 2], [0, 3, 0, 1], [4, 0, 0, 0], [1, 1, 1, 1]]
    assert det_exact(m) == det_leibniz(m)


def _matrix(rng, n):
    return [[random_fraction(rng) for _ in range(n)] for _ in range(n)]


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


@given(st.integers(1, 5), st.integers(0, 2**32))
def test_det_multiplicative(n, seed):
    rng = random.Random(seed)
    a, b = _matrix(rng, n), _matrix(rng, n)
    assert det_exact(_matmul(a, b)) == det_exact(a) * det_exact(b)


@given(st.integers(2, 6), st.integers(0, 2**32))
def test_det_alternating(n, seed):
    rng = random.Random(seed)
    a = _matrix(rng, n)
    i, j = rng.sample(range(n), 2)
    b = [row[:] for row in a]
    b[i], b[j] = b[j], b[i]
    assert det_exact(b) == -det_exact(a)


@given(st.integers(1, 5), st.integers(0, 2**32))
def test_det_matches_leibniz(n, seed):
    m = _matrix(random.Random(seed), n)
    assert det_exact(m) == det_leibniz(m)


def test_det_over_polynomials_uses_exact_division():
    t1, t2 = TPoly.variable(1, 2), TPoly.variable(2, 2)
    m = [[t1 + k * t2 + (i + 1) ** k for k in range(5)] for i in range(5)]
    m[2][3] = m[2][3] * t1
    assert det_exact(m) == det_leibniz(m)


# -- TPoly ----------------------------------------------------------------------------


def _poly(rng, nvars=3, terms=4):
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, 2) for _ in range(nvars))
        out[exps] = random_fraction(rng)
    return TPoly(out, nvars)


def test_tpoly_drops_zero_terms():
    p = TPoly({(1, 0): Fraction(0), (0, 1): Fraction(2)}, 2)
    assert p.terms == {(0, 1): Fraction(2)}
    assert not (p - p)
    assert (p - p).weighted_degree() == -1


def test_tpoly_weighted_degree():
    t1, t2 = TPoly.variable(1, 2), TPoly.variable(2, 2)
    p = t1 * t1 * Fraction(1, 2) + t2
    assert p.weighted_degree() == 2
    assert p.total_degree() == 2
    assert p.is_weighted_homogeneous(2)
    assert not (p + 1).is_weighted_homogeneous(2)


@given(st.integers(0, 2**32))
def test_tpoly_ring_laws(seed):
    rng = random.Random(seed)
    f, g, h = (_poly(rng) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f


@given(st.integers(0, 2**32))
def test_tpoly_evaluation_is_a_homomorphism(seed):
    rng = random.Random(seed)
    f, g = _poly(rng), _poly(rng)
    x = [random_fraction(rng) for _ in range(3)]
    assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
    assert (f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x)


@given(st.integers(0, 2**32))
def test_tpoly_exact_division(seed):
    rng = random.Random(seed)
    f, g = _poly(rng), _poly(rng)
    if g:
        assert (f * g).divexact(g) == f


def test_tpoly_inexact_division_raises():
    t1 = TPoly.variable(1, 1)
    with pytest.raises(ArithmeticError):
        (t1 + 1).divexact(t1)


def test_tpoly_negate_times():
    t1, t2 = TPoly.variable(1, 2), TPoly.variable(2, 2)
    assert (t1 * t1 + t2 * 3).negate_times() == t1 * t1 - t2 * 3


def test_tpoly_json_round_trip():
    t1, t2 = TPoly.variable(1, 2), TPoly.variable(2, 2)
    p = t1 * t1 * Fraction(1, 2) - t2 + 3
    data = json.loads(p.dumps())
    assert data == [
        {"exponents": [0, 0], "coeff": "3"},
        {"exponents": [0, 1], "coeff": "-1"},
        {"exponents": [2, 0], "coeff": "1/2"},
    ]
    assert TPoly.from_json(data) == p


# -- interpolation ---------------------------------------------------------------------


def test_degree_by_interpolation_examples():
    samples = [(x, x * x) for x in (Fraction(1), Fraction(2), Fraction(3), Fraction(5))]
    assert degree_by_interpolation(samples, 2)
    assert not degree_by_interpolation(samples, 1)
    assert interpolate(samples[:3], 4) == 16


def test_degree_by_interpolation_errors():
    with pytest.raises(ValueError):
        degree_by_interpolation([(1, 1), (1, 2), (2, 3)], 1)
    with pytest.raises(ValueError):
        degree_by_interpolation([(1, 1), (2, 2)], 1)
