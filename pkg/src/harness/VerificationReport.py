#!/usr/bin/env python3
"""
Verification Report

Result of one verification campaign: the per-cell rows, the violation rows, the
optional per-rule summary, and timing metadata kept apart from the deterministic
content.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

MISSING = 'n/a'


def normalize_cell(value: Any) -> Any:
    """Render a missing cell as 'n/a' and numpy scalars as plain Python values."""
    if value is None:
        return MISSING
    if hasattr(value, 'item') and not isinstance(value, (str, bytes)):
        return value.item()
    return value


def _frame(records: List[Dict], columns: Optional[List[str]]) -> pd.DataFrame:
    normalized = [{key: normalize_cell(v) for key, v in record.items()} for record in records]
    return pd.DataFrame(normalized, columns=columns, dtype=object)


@dataclass
class VerificationReport:
    campaign_id: str
    kind: str
    n_min: int
    n_max: int
    rows: List[Dict]
    columns: List[str]
    violations: List[Dict] = field(default_factory=list)
    violation_columns: List[str] = field(default_factory=list)
    rule_summary: Optional[List[Dict]] = None
    rule_summary_columns: List[str] = field(default_factory=list)
    timing: Dict[str, Any] = field(default_factory=dict)

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def passed(self) -> bool:
        return not self.violations

    def rows_frame(self) -> pd.DataFrame:
        return _frame(self.rows, self.columns)

    def violations_frame(self) -> pd.DataFrame:
        return _frame(self.violations, self.violation_columns or None)

    def rule_summary_frame(self) -> Optional[pd.DataFrame]:
        if self.rule_summary is None:
            return None
        return _frame(self.rule_summary, self.rule_summary_columns or None)

    def row(self, n: int, parameter: Optional[int] = None) -> Optional[Dict]:
        """First row for order n (and parameter value, when the report has one)."""
        for row in self.rows:
            if row.get('n') != n:
                continue
            if parameter is None or row.get('param') == parameter:
                return row
        return None

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """
        JSON ready mirror of the report; cells are normalized exactly like the CSV
        rendering.
        """
        result: Dict[str, Any] = {
            'campaign_id': self.campaign_id,
            'kind': self.kind,
            'n_min': self.n_min,
            'n_max': self.n_max,
            'passed': self.passed,
            'violation_count': self.violation_count,
            'rows': self.rows_frame().to_dict(orient='records'),
            'violations': self.violations_frame().to_dict(orient='records'),
        }
        summary = self.rule_summary_frame()
        if summary is not None:
            result['rule_summary'] = summary.to_dict(orient='records')
        if include_timing:
            result['timing'] = dict(self.timing)
        return result
