import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_fraction(rng, lo=-9, hi=9, den=7):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))
