import pytest
import sys
import os
import json
from fractions import Fraction

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'python'))

from cli.serialization import (format_rational, parse_rational, report_to_dict, report_to_text,
                               reports_to_json, series_from_json, series_to_json, series_to_text)
from harness.comparator import IdentityReport, Mismatch, Status
from series.exact_series import QSeries

RANDOM_CASES = 1000


class TestRationals:
    """Test cases for rational formatting"""

    @pytest.mark.parametrize("value,text", [
        (Fraction(1, 2), '1/2'), (Fraction(-3), '-3/1'), (Fraction(0), '0/1'),
    ])
    def test_format(self, value, text):
        assert format_rational(value) == text

    def test_parse_plain_integer(self):
        """Test that a bare integer parses with denominator 1"""
        assert parse_rational('7') == 7
        assert parse_rational('-6/4') == Fraction(-3, 2)


class TestSeriesFormats:
    """Test cases for series text and JSON"""

    def test_json_is_exact(self, rng, series_factory):
        """Test that JSON parsing reproduces random series exactly"""
        for _ in range(RANDOM_CASES):
            s = series_factory(rng)
            assert series_from_json(series_to_json(s)) == s

    def test_json_layout(self):
        """Test the JSON fields"""
        data = json.loads(series_to_json(QSeries([Fraction(1, 2), 0, -1], -1, 4)))
        assert data == {'min_exp': -1, 'trunc_order': 4, 'coeffs': [[-1, '1/2'], [1, '-1/1']]}

    def test_text(self):
        """Test the text rendering and the zero series"""
        assert series_to_text(QSeries([1, -1], 0, 3)) == '1/1 q^0 + -1/1 q^1 + O(q^4)'
        assert series_to_text(QSeries.zero(2)) == '0 + O(q^3)'


class TestReportFormats:
    """Test cases for report rendering"""

    def test_dict_for_mismatch(self):
        """Test the report dict keys and the bivariate witness"""
        report = IdentityReport('mabc:1,2,1:q^1,q^1', 20, Status.MISMATCH,
                                Mismatch(4, (1, -2), Fraction(1, 2), Fraction(0)))
        assert report_to_dict(report) == {
            'identity': 'mabc:1,2,1:q^1,q^1',
            'order': 20,
            'status': 'MISMATCH',
            'experiment': False,
            'first_mismatch': {'q': 4, 'x': 1, 'y': -2, 'lhs': '1/2', 'rhs': '0/1'},
        }

    def test_json_list(self):
        """Test that a list of reports serializes to a JSON array"""
        reports = [IdentityReport('jtp:q^1,1', 10, Status.EQUAL),
                   IdentityReport.error('habiro:2,1', 10, 'boom', experiment=True)]
        data = json.loads(reports_to_json(reports))
        assert [d['status'] for d in data] == ['EQUAL', 'ERROR']
        assert data[1]['experiment'] is True
        assert data[0]['first_mismatch'] is None

    def test_text(self):
        """Test the one-line text form"""
        report = IdentityReport('habiro:2,1', 30, Status.MISMATCH,
                                Mismatch(0, None, Fraction(0), Fraction(1)), experiment=True)
        assert report_to_text(report) == ('habiro:2,1: MISMATCH through q^30 [experiment] '
                                          '(first mismatch at q^0: lhs=0/1, rhs=1/1)')
