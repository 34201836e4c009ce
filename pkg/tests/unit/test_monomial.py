import pytest
import sys
import os

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'python'))

from qfunctions.monomial import XYMonomial, q_pow


class TestXYMonomial:
    """Test cases for signed q-power monomials"""

    @pytest.mark.parametrize("text,sign,qexp", [
        ("q^2", 1, 2),
        ("-q^7", -1, 7),
        ("q^0", 1, 0),
        ("+q^-3", 1, -3),
        (" - q^ -1 ", -1, -1),
    ])
    def test_parse(self, text, sign, qexp):
        """Test parsing of monomial literals"""
        assert XYMonomial.parse(text) == XYMonomial(sign, qexp)

    @pytest.mark.parametrize("text", ["q", "2q^2", "q^1.5", "x^2", ""])
    def test_parse_rejects(self, text):
        """Test that malformed literals raise ValueError"""
        with pytest.raises(ValueError):
            XYMonomial.parse(text)

    def test_sign_must_be_unit(self):
        """Test that signs other than +1 and -1 are rejected"""
        with pytest.raises(ValueError):
            XYMonomial(2, 0)

    def test_str_round_trip(self):
        """Test that str() produces a parseable literal"""
        for m in (XYMonomial(1, 4), XYMonomial(-1, -2), XYMonomial(-1, 0)):
            assert XYMonomial.parse(str(m)) == m

    def test_arithmetic(self):
        """Test products, quotients, powers and negation"""
        x, y = XYMonomial(-1, 2), XYMonomial(1, 3)
        assert x * y == XYMonomial(-1, 5)
        assert x / y == XYMonomial(-1, -1)
        assert x ** 2 == XYMonomial(1, 4)
        assert x ** -3 == XYMonomial(-1, -6)
        assert -y == XYMonomial(-1, 3)
        assert x.shift(-2) == XYMonomial(-1, 0)

    def test_q_pow(self):
        """Test the q_pow helper"""
        assert q_pow(3) == XYMonomial(1, 3)
        assert q_pow(-1, -1) == XYMonomial(-1, -1)
