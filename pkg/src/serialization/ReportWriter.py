#!/usr/bin/env python3
"""
Report Writer

CSV and JSON renderings of verification reports and extremal tables. Both
renderings of a report carry the same cell values; missing cells read 'n/a'.
"""

import json
import logging
from typing import List, Optional

import pandas as pd

from src.harness.VerificationReport import VerificationReport

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


class ReportFormatError(ValueError):
    pass


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator='\n')


def report_to_csv(report: VerificationReport) -> str:
    """
    CSV rendering: the report rows; a rule report appends its per-rule summary and
    violation rows as further CSV blocks after a blank line.
    """
    blocks = [frame_to_csv(report.rows_frame())]
    summary = report.rule_summary_frame()
    if summary is not None:
        blocks.append(frame_to_csv(summary))
    if report.violations:
        blocks.append(frame_to_csv(report.violations_frame()))
    return '\n'.join(blocks)


def report_to_json(report: VerificationReport, include_timing: bool = True) -> str:
    return json.dumps(report.to_dict(include_timing=include_timing), indent=2) + '\n'


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == 'csv':
        return report_to_csv(report)
    if fmt == 'json':
        return report_to_json(report)
    raise ReportFormatError(f"unknown report format {fmt!r}, expected one of {FORMATS}")


def write_report(report: VerificationReport, fmt: str, path: Optional[str] = None) -> str:
    """
    Render a report and write it to `path` when given.

    Returns:
        str: The rendered text
    """
    text = render_report(report, fmt)
    if path:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info(f"Wrote {fmt} report {report.campaign_id} to {path}")
    return text


def render_reports(reports: List[VerificationReport], fmt: str) -> str:
    """Several campaigns in one document: a JSON array, or CSV blocks separated by blank lines."""
    if len(reports) == 1:
        return render_report(reports[0], fmt)
    if fmt == 'json':
        return json.dumps([r.to_dict() for r in reports], indent=2) + '\n'
    return '\n'.join(render_report(r, fmt) for r in reports)


def write_reports(reports: List[VerificationReport], fmt: str, path: Optional[str] = None) -> str:
    text = render_reports(reports, fmt)
    if path:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.info(f"Wrote {len(reports)} {fmt} report(s) to {path}")
    return text
