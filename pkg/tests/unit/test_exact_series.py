import pytest
import sys
import os
from fractions import Fraction

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'python'))

from series.errors import OrderExceeded, ZeroLeadingCoefficient
from series.exact_series import QSeries, ensure_order

RANDOM_CASES = 1000


def one_minus_q(order):
    return QSeries([1, -1], 0, order)


class TestQSeriesConstruction:
    """Test cases for building QSeries values"""

    def test_leading_zeros_are_trimmed(self):
        """Test that min_exp moves to the first nonzero coefficient"""
        s = QSeries([0, 0, 3, 1], -1, 5)
        assert s.min_exp == 1
        assert s.coeff_at(1) == 3
        assert s.coeff_at(-1) == 0
        assert s.valuation == 1

    def test_zero_representative(self):
        """Test that every zero series has min_exp 0 and valuation N + 1"""
        z = QSeries([0, 0], -4, 7)
        assert z.is_zero
        assert z.min_exp == 0
        assert z.valuation == 8
        assert z == QSeries.zero(7)

    def test_terms_beyond_truncation_are_dropped(self):
        """Test that coefficients above trunc_order are not stored"""
        s = QSeries([1, 2, 3, 4, 5], 0, 2)
        assert list(s.items()) == [(0, 1), (1, 2), (2, 3)]

    def test_from_terms(self):
        """Test building from a sparse exponent map"""
        s = QSeries.from_terms({-2: 1, 3: Fraction(1, 2), 9: 7}, 5)
        assert list(s.items()) == [(-2, 1), (3, Fraction(1, 2))]

    def test_coeff_beyond_truncation_raises(self):
        """Test that reading past the truncation is an error"""
        with pytest.raises(OrderExceeded):
            QSeries.const(1, 4).coeff_at(5)

    def test_value_semantics(self):
        """Test equality and hashing include the truncation"""
        assert QSeries.const(2, 5) == QSeries([2], 0, 5)
        assert QSeries.const(2, 5) != QSeries.const(2, 6)
        assert len({QSeries.const(2, 5), QSeries([2, 0], 0, 5)}) == 1


class TestQSeriesArithmetic:
    """Test cases for the ring operations"""

    def test_add_takes_smaller_truncation(self):
        """Test that a sum is only known as far as both summands"""
        s = QSeries([1, 1], 0, 10) + QSeries([1], 3, 4)
        assert s.trunc_order == 4
        assert list(s.items()) == [(0, 1), (1, 1), (3, 1)]

    def test_add_scalar(self):
        """Test adding plain numbers"""
        s = 1 + QSeries([0, 1], 0, 3)
        assert list(s.items()) == [(0, 1), (1, 1)]
        assert list((QSeries.const(1, 3) - 1).items()) == []

    def test_product_truncation_rule(self):
        """Test that the product is exact through min(Na + vb, Nb + va)"""
        a = QSeries([1], -2, 5)
        b = QSeries([1, 1], 1, 8)
        assert (a * b).trunc_order == min(5 + 1, 8 - 2)

    def test_product_values(self):
        """Test (1 - q)(1 + q) = 1 - q^2"""
        product = one_minus_q(6) * QSeries([1, 1], 0, 6)
        assert list(product.items()) == [(0, 1), (2, -1)]

    def test_shift_moves_truncation(self):
        """Test that q^k s is exact through N + k"""
        s = one_minus_q(4).shift(-3)
        assert s.min_exp == -3
        assert s.trunc_order == 1

    def test_power(self):
        """Test integer powers including zero and negative exponents"""
        s = one_minus_q(6)
        assert list((s ** 2).items()) == [(0, 1), (1, -2), (2, 1)]
        assert s ** 0 == QSeries.const(1, 6)
        assert list((s ** -1).items()) == [(k, 1) for k in range(7)]

    def test_subst_qpow(self):
        """Test q -> q^k with truncation kN + k - 1"""
        s = one_minus_q(4).subst_qpow(3)
        assert s.trunc_order == 14
        assert list(s.items()) == [(0, 1), (3, -1)]

    def test_subst_qpow_rejects_nonpositive(self):
        """Test that q -> q^0 is rejected"""
        with pytest.raises(ValueError):
            one_minus_q(4).subst_qpow(0)

    def test_truncate(self):
        """Test lowering and refusing to raise the truncation"""
        s = QSeries([1, 2, 3], 0, 5)
        assert list(s.truncate(1).items()) == [(0, 1), (1, 2)]
        with pytest.raises(OrderExceeded):
            s.truncate(6)

    def test_first_difference(self):
        """Test the smallest differing exponent and the order guard"""
        a = QSeries([1, 2, 3], 0, 5)
        b = QSeries([1, 2, 4], 0, 6)
        assert a.first_difference(b, 5) == 2
        assert a.first_difference(a, 5) is None
        assert a.eq_to_order(b, 1)
        with pytest.raises(OrderExceeded):
            a.first_difference(b, 6)


class TestQSeriesInversion:
    """Test cases for multiplicative inverses"""

    def test_geometric_series(self):
        """Test 1/(1 - q) = 1 + q + q^2 + ..."""
        inv = one_minus_q(8).invert()
        assert inv.trunc_order == 8
        assert list(inv.items()) == [(k, 1) for k in range(9)]

    def test_negative_valuation_loses_precision(self):
        """Test that inverting q^v u is exact through N - 2v"""
        s = QSeries([2, 1], 3, 10)
        inv = s.invert()
        assert inv.min_exp == -3
        assert inv.trunc_order == 4
        assert inv.coeff_at(-3) == Fraction(1, 2)
        assert inv.coeff_at(-2) == Fraction(-1, 4)

    def test_invert_zero_raises(self):
        """Test that a series zero to its truncation cannot be inverted"""
        with pytest.raises(ZeroLeadingCoefficient):
            QSeries.zero(5).invert()

    def test_inversion_round_trip(self, rng, series_factory):
        """Test s * s^-1 = 1 through the product's truncation on random series"""
        for _ in range(RANDOM_CASES):
            s = series_factory(rng)
            product = s * s.invert()
            one = QSeries.const(1, product.trunc_order)
            assert product.first_difference(one, product.trunc_order) is None, s


class TestRingLaws:
    """Randomized ring-law checks through the common truncation"""

    @staticmethod
    def agree(left, right):
        order = min(left.trunc_order, right.trunc_order)
        return left.first_difference(right, order) is None

    def test_commutativity(self, rng, series_factory):
        """Test a + b = b + a and a * b = b * a exactly"""
        for _ in range(RANDOM_CASES):
            a, b = series_factory(rng), series_factory(rng)
            assert a + b == b + a
            assert a * b == b * a

    def test_associativity(self, rng, series_factory):
        """Test (a + b) + c = a + (b + c) and (a * b) * c = a * (b * c)"""
        for _ in range(RANDOM_CASES):
            a, b, c = (series_factory(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert self.agree((a * b) * c, a * (b * c))

    def test_distributivity(self, rng, series_factory):
        """Test a * (b + c) = a * b + a * c"""
        for _ in range(RANDOM_CASES):
            a, b, c = (series_factory(rng) for _ in range(3))
            assert self.agree(a * (b + c), a * b + a * c)

    def test_additive_inverse(self, rng, series_factory):
        """Test a - a = 0"""
        for _ in range(RANDOM_CASES):
            a = series_factory(rng)
            assert (a - a).is_zero


class TestTruncationSoundness:
    """Every reported coefficient must match the untruncated computation"""

    def test_product_of_truncations(self, rng, terms_factory):
        """Test that truncating the inputs never corrupts the reported product"""
        full_order = 40
        for _ in range(RANDOM_CASES):
            lo_a, lo_b = rng.randint(-3, 3), rng.randint(-3, 3)
            terms_a = terms_factory(rng, lo_a, full_order)
            terms_b = terms_factory(rng, lo_b, full_order)
            n_a, n_b = rng.randint(lo_a + 1, 14), rng.randint(lo_b + 1, 14)

            short = QSeries.from_terms(terms_a, n_a) * QSeries.from_terms(terms_b, n_b)
            full = QSeries.from_terms(terms_a, full_order) * QSeries.from_terms(terms_b, full_order)
            assert short.trunc_order <= full.trunc_order
            assert short.first_difference(full, short.trunc_order) is None

    def test_inverse_of_truncation(self, rng, terms_factory):
        """Test that a truncated inverse agrees with the inverse of the longer series"""
        for _ in range(RANDOM_CASES):
            lo = rng.randint(-3, 3)
            terms = terms_factory(rng, lo, 40)
            n = rng.randint(max(lo, 0) + 1, 14)
            short = QSeries.from_terms(terms, n).invert()
            full = QSeries.from_terms(terms, 40).invert()
            assert short.first_difference(full, short.trunc_order) is None


class TestEnsureOrder:
    """Test cases for ensure_order"""

    def test_retries_until_exact(self):
        """Test that a builder losing precision is rerun at a higher order"""
        calls = []

        def build(working):
            calls.append(working)
            return one_minus_q(working).shift(-2)

        result = ensure_order(build, 10)
        assert result.trunc_order == 10
        assert calls == [10, 12]

    def test_gives_up(self):
        """Test that a builder that never reaches the order raises"""
        with pytest.raises(OrderExceeded):
            ensure_order(lambda working: QSeries.const(1, 0), 5, max_rounds=3)
