import pytest
import sys
import os
import random
from fractions import Fraction

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'python'))

from series.bivariate import BivariateQSeries
from series.exact_series import QSeries
from hecke.hecke_sums import HeckeParams

RANDOM_SEED = 20240611
RANDOM_CASES = 1000


def random_terms(rng, lo=-3, hi=12, density=0.7, leading=True):
    """Sparse {exponent: Fraction} with exponents in [lo, hi]; nonzero at lo when leading"""
    terms = {}
    for k in range(lo, hi + 1):
        if (leading and k == lo) or rng.random() < density:
            num = rng.randint(-5, 5)
            if leading and k == lo and num == 0:
                num = 1
            terms[k] = Fraction(num, rng.randint(1, 4))
    return terms


def random_series(rng, max_order=14, min_val=-3, max_val=3):
    """A random QSeries with valuation in [min_val, max_val] and a random truncation"""
    lo = rng.randint(min_val, max_val)
    order = rng.randint(max(lo, 0) + 2, max_order)
    return QSeries.from_terms(random_terms(rng, lo, order), order)


def random_bivariate(rng, max_order=8, min_val=-2, max_val=2, spread=2):
    """A random BivariateQSeries with a few x^i y^j terms per q-power, |i|, |j| <= spread"""
    lo = rng.randint(min_val, max_val)
    order = rng.randint(max(lo, 0) + 1, max_order)
    terms = []
    for k in range(lo, order + 1):
        for _ in range(rng.randint(0, 3)):
            i, j = rng.randint(-spread, spread), rng.randint(-spread, spread)
            terms.append((k, i, j, Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
    return BivariateQSeries.from_terms(terms, order)


@pytest.fixture
def rng():
    """Seeded generator so randomized checks reproduce"""
    return random.Random(RANDOM_SEED)


@pytest.fixture
def series_factory():
    """Callable producing random series from a generator"""
    return random_series


@pytest.fixture
def terms_factory():
    return random_terms


@pytest.fixture
def bivariate_factory():
    """Callable producing random bivariate series from a generator"""
    return random_bivariate


@pytest.fixture(scope="session")
def negative_discriminant_params():
    """A few (a, b, c) with b^2 < ac"""
    return [HeckeParams(1, 1, 2), HeckeParams(2, 1, 1), HeckeParams(3, 2, 3), HeckeParams(1, 2, 5)]


@pytest.fixture(scope="session")
def euler_coefficients():
    """(q; q)_inf through q^15 from the pentagonal number theorem"""
    coeffs = [0] * 16
    for k, sign in ((0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)):
        coeffs[k] = sign
    return coeffs
