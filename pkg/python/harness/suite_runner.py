import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

import pandas as pd

from harness.comparator import IdentityReport, Status
from harness.identity_catalog import catalog_ids, run_identity

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
    'max_workers': 1,
    'order': 50,
    'executor': 'process',
}

EXECUTORS = {
    'process': ProcessPoolExecutor,
    'thread': ThreadPoolExecutor,
}


class SuiteRunner:
    """Runs catalog identities over their default grids and summarizes the outcome"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = {**DEFAULT_CONFIG, **(config or {})}
        if self.config['executor'] not in EXECUTORS:
            raise ValueError(f"executor must be one of {sorted(EXECUTORS)}, got {self.config['executor']!r}")
        self.results: List[IdentityReport] = []

    def run_suite(self, prefix: Optional[str] = None, order: Optional[int] = None) -> List[IdentityReport]:
        """Run every grid identity starting with prefix; reports come back in catalog order"""
        order = order if order is not None else self.config.get('order', 50)
        max_workers = max(1, int(self.config.get('max_workers', 1)))
        identity_ids = catalog_ids(prefix)
        start_time = time.time()

        if max_workers == 1:
            reports = [_run_logged(identity_id, order) for identity_id in identity_ids]
        else:
            slots: List[Optional[IdentityReport]] = [None] * len(identity_ids)
            # catalog entries are CPU-bound, so the default pool uses processes
            pool = EXECUTORS[self.config.get('executor', 'process')]
            with pool(max_workers=max_workers) as executor:
                futures = {executor.submit(_run_logged, identity_id, order): i
                           for i, identity_id in enumerate(identity_ids)}
                for future in as_completed(futures):
                    slots[futures[future]] = future.result()
            reports = [report for report in slots if report is not None]

        logger.info("suite %r through q^%d: %d identities in %.2f s",
                    prefix or '', order, len(reports), time.time() - start_time)
        self.results = reports
        return reports

    def generate_report(self, reports: Optional[List[IdentityReport]] = None) -> str:
        """Plain-text verification report with per-identity timings"""
        reports = self.results if reports is None else reports
        lines = []
        lines.append("q-series Identity Verification Report")
        lines.append("=" * 50)

        for report in reports:
            tag = ' (experiment)' if report.experiment else ''
            lines.append(f"\nIdentity: {report.identity_id}{tag}")
            lines.append(f"Order: {report.order_checked}")
            lines.append(f"Status: {report.status.value}")
            if report.first_mismatch is not None:
                m = report.first_mismatch
                where = f"q^{m.q_exp}" if m.xy is None else f"q^{m.q_exp} x^{m.xy[0]} y^{m.xy[1]}"
                lines.append(f"First Mismatch: {where} lhs={m.lhs} rhs={m.rhs}")
            if report.error_detail:
                lines.append(f"Error: {report.error_detail}")
            lines.append(f"Time: {report.elapsed_ms:.2f} ms")

        counts = {status: sum(1 for r in reports if r.status == status) for status in Status}
        lines.append("\n" + "-" * 50)
        lines.append("Totals: " + ", ".join(f"{status.value}={n}" for status, n in counts.items()))
        return "\n".join(lines)


def _run_logged(identity_id: str, order: int) -> IdentityReport:
    report = run_identity(identity_id, order)
    logger.info(json.dumps({
        'identity': report.identity_id,
        'status': report.status.value,
        'order': report.order_checked,
        'experiment': report.experiment,
        'elapsed_ms': round(report.elapsed_ms, 2),
    }))
    return report


def reports_to_frame(reports: List[IdentityReport]) -> pd.DataFrame:
    """One row per report; the first mismatch is flattened into columns"""
    rows = []
    for report in reports:
        m = report.first_mismatch
        rows.append({
            'identity': report.identity_id,
            'family': report.identity_id.split(':', 1)[0],
            'order': report.order_checked,
            'status': report.status.value,
            'experiment': report.experiment,
            'mismatch_q': m.q_exp if m else None,
            'mismatch_lhs': str(m.lhs) if m else None,
            'mismatch_rhs': str(m.rhs) if m else None,
            'elapsed_ms': report.elapsed_ms,
        })
    columns = ['identity', 'family', 'order', 'status', 'experiment',
               'mismatch_q', 'mismatch_lhs', 'mismatch_rhs', 'elapsed_ms']
    return pd.DataFrame(rows, columns=columns)


def summarize(reports: List[IdentityReport]) -> pd.DataFrame:
    """Status counts per identity family"""
    frame = reports_to_frame(reports)
    if frame.empty:
        return pd.DataFrame(columns=['family', 'EQUAL', 'MISMATCH', 'ERROR'])
    table = frame.groupby(['family', 'status']).size().unstack(fill_value=0)
    for status in Status:
        if status.value not in table.columns:
            table[status.value] = 0
    return table[[s.value for s in Status]].reset_index()


def run_suite(prefix: Optional[str] = None, order: int = 50, max_workers: int = 1,
              executor: str = 'process') -> List[IdentityReport]:
    return SuiteRunner({'order': order, 'max_workers': max_workers, 'executor': executor}).run_suite(prefix)
