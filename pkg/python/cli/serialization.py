"""
Exact text and JSON renderings of series and reports.

Coefficients are always written as "num/den" strings, never floats, so
parsing the JSON reproduces the series exactly.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List

from harness.comparator import IdentityReport
from series.exact_series import QSeries


def format_rational(c: Fraction) -> str:
    return f'{c.numerator}/{c.denominator}'


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition('/')
    return Fraction(int(num), int(den or 1))


def series_to_dict(s: QSeries) -> Dict[str, Any]:
    return {
        'min_exp': s.min_exp,
        'trunc_order': s.trunc_order,
        'coeffs': [[k, format_rational(c)] for k, c in s.items()],
    }


def series_from_dict(data: Dict[str, Any]) -> QSeries:
    terms = {int(k): parse_rational(c) for k, c in data['coeffs']}
    return QSeries.from_terms(terms, int(data['trunc_order']))


def series_to_json(s: QSeries) -> str:
    return json.dumps(series_to_dict(s))


def series_from_json(text: str) -> QSeries:
    return series_from_dict(json.loads(text))


def series_to_text(s: QSeries) -> str:
    """'c_k q^k' terms in increasing k, then the truncation marker"""
    terms = [f'{format_rational(c)} q^{k}' for k, c in s.items()]
    body = ' + '.join(terms) if terms else '0'
    return f'{body} + O(q^{s.trunc_order + 1})'


def report_to_dict(report: IdentityReport) -> Dict[str, Any]:
    m = report.first_mismatch
    mismatch = None
    if m is not None:
        mismatch = {
            'q': m.q_exp,
            'x': m.xy[0] if m.xy else None,
            'y': m.xy[1] if m.xy else None,
            'lhs': format_rational(m.lhs),
            'rhs': format_rational(m.rhs),
        }
    return {
        'identity': report.identity_id,
        'order': report.order_checked,
        'status': report.status.value,
        'experiment': report.experiment,
        'first_mismatch': mismatch,
    }


def reports_to_json(reports: List[IdentityReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def report_to_text(report: IdentityReport) -> str:
    line = f'{report.identity_id}: {report.status.value} through q^{report.order_checked}'
    if report.experiment:
        line += ' [experiment]'
    m = report.first_mismatch
    if m is not None:
        where = f'q^{m.q_exp}' if m.xy is None else f'q^{m.q_exp} x^{m.xy[0]} y^{m.xy[1]}'
        line += f' (first mismatch at {where}: lhs={format_rational(m.lhs)}, rhs={format_rational(m.rhs)})'
    if report.error_detail:
        line += f' ({report.error_detail})'
    return line
