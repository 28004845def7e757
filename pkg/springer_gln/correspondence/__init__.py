"""
The correspondence table and its golden fixtures.
"""

from .table import (
    CorrespondenceRow,
    correspondence_table,
    verify_round_trips,
    unit_rep_orbit,
    sign_rep_orbit,
    induced_orbit
)
from .appendix import (
    APPENDIX_SIZES,
    AppendixReport,
    load_appendix,
    verify_appendix
)

__all__ = [
    'CorrespondenceRow',
    'correspondence_table',
    'verify_round_trips',
    'unit_rep_orbit',
    'sign_rep_orbit',
    'induced_orbit',
    'APPENDIX_SIZES',
    'AppendixReport',
    'load_appendix',
    'verify_appendix'
]
