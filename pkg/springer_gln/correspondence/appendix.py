"""
Golden correspondence tables for N = 2..7.

Each fixture file holds one row per element of Psi_N as
``pair<TAB>series<TAB>mu`` in the label grammar; lines starting with '#'
are comments.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import List

from springer_gln.core.exceptions import SpringerError
from springer_gln.core.partitions import format_partition, parse_partition
from springer_gln.correspondence.table import CorrespondenceRow, correspondence_table
from springer_gln.orbits.labels import format_label, parse_label
from springer_gln.series.cuspidal import format_series, parse_series

# Configure logging
logger = logging.getLogger(__name__)

APPENDIX_SIZES = (2, 3, 4, 5, 6, 7)

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def fixture_path(N):
    return os.path.join(DATA_DIR, f"appendix_N{N}.tsv")


def format_row(row):
    return "\t".join((format_label(row.pair), format_series(row.series), format_partition(row.mu)))


def load_appendix(N):
    """Read the golden table for N.

    Raises:
        SpringerError: If N has no fixture or a line is malformed
    """
    if N not in APPENDIX_SIZES:
        raise SpringerError(f"no golden table for N={N}; available: {APPENDIX_SIZES}")
    rows = []
    with open(fixture_path(N), 'r', encoding='utf-8') as f:
        for line_number, line in enumerate(f, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise SpringerError(f"{fixture_path(N)}:{line_number}: expected 3 tab-separated fields")
            try:
                rows.append(CorrespondenceRow(
                    parse_label(fields[0]), parse_series(fields[1]), parse_partition(fields[2])
                ))
            except SpringerError as e:
                logger.error(f"{fixture_path(N)}:{line_number}: {e}")
                raise
    return rows


@dataclass
class AppendixReport:
    """Difference between a computed table and its golden fixture."""

    N: int
    expected_rows: int
    computed_rows: int
    missing: List[str] = field(default_factory=list)
    unexpected: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.missing and not self.unexpected

    def to_dict(self):
        return {
            "N": self.N,
            "ok": self.ok,
            "expected_rows": self.expected_rows,
            "computed_rows": self.computed_rows,
            "missing": self.missing,
            "unexpected": self.unexpected,
        }


def verify_appendix(N):
    """Compare correspondence_table(N) with the golden fixture.

    Returns:
        AppendixReport: ``missing`` lists fixture rows the computation lacks,
        ``unexpected`` lists computed rows absent from the fixture
    """
    expected = {format_row(row) for row in load_appendix(N)}
    computed = {format_row(row) for row in correspondence_table(N)}
    report = AppendixReport(
        N=N,
        expected_rows=len(expected),
        computed_rows=len(computed),
        missing=sorted(expected - computed),
        unexpected=sorted(computed - expected),
    )
    if report.ok:
        logger.info(f"Golden table N={N}: {report.computed_rows} rows match")
    else:
        logger.error(f"Golden table N={N}: {len(report.missing)} missing, {len(report.unexpected)} unexpected")
    return report
