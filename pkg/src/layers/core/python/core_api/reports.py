# -*- coding: utf-8 -*-
"""
Report writers. Structured reports are JSON Lines opened by a header record;
tabular reports are CSV with the configuration on a leading comment line.
"""
import os
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional

import pandas as pd
import simplejson as json
from tabulate import tabulate

from core_utils.enum import ReportFormat
from core_utils.error import ScenarioError
from core_utils.utils import cast_default, expand_rationals, fraction_to_str, get_logger

__all__ = [
    "REPORT_VERSION",
    "prepare_records",
    "write_report",
    "render_summary",
]

LAYER_NAME = 'layer-api-reports'
LOGGER = get_logger(LAYER_NAME)

REPORT_VERSION = 1


def _dumps(value) -> str:
    return json.dumps(value, default=cast_default, ensure_ascii=False, ignore_nan=True)


def prepare_records(records: Iterable[dict]) -> List[dict]:
    """Add the decimal companions of every exact rational."""
    return [expand_rationals(record) for record in records]


def _cell(value):
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple, dict, set, frozenset)):
        return _dumps(value)
    return value


def write_report(kind: str, config: dict, records: Iterable[dict],
                 report_format: ReportFormat = ReportFormat.STRUCTURED,
                 output: Optional[str] = None) -> str:
    """
    Render a report and write it to ``output`` when given.

    Parameters
    ----------
    kind : str
        ``simulate``, ``analytics``, ``classify``, ``verify`` or ``sweep``.
    config : dict
        Resolved scenario, embedded in the report.
    records : iterable of dict
    report_format : ReportFormat
    output : str, optional

    Returns
    -------
    str
        The report text.

    """
    rows = prepare_records(records)
    header = {"format": kind, "version": REPORT_VERSION, "config": config}
    if report_format is ReportFormat.STRUCTURED:
        lines = [_dumps(header)] + [_dumps(row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        frame = pd.DataFrame([{key: _cell(value) for key, value in row.items()} for row in rows])
        text = "# " + _dumps(header) + "\n" + frame.to_csv(index=False, lineterminator="\n")
    if output:
        directory = os.path.dirname(os.path.abspath(output))
        if not os.path.isdir(directory):
            raise ScenarioError(f"output directory '{directory}' does not exist")
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        LOGGER.info({"report": kind, "format": report_format.value, "output": output, "records": len(rows)})
    return text


def render_summary(rows: Iterable[dict], columns: Optional[List[str]] = None) -> str:
    """
    Plain text table for the terminal. Rationals are shown exactly.
    """
    rows = list(rows)
    if not rows:
        return "(no records)"
    columns = columns or list(rows[0])
    table = [[_cell(row.get(column)) for column in columns] for row in rows]
    return tabulate(table, headers=columns, tablefmt="simple")
