"""
Output rendering for the command-line interface.
"""

from .formatters import (
    OUTPUT_FORMATS,
    jsonable,
    render_json,
    records_frame,
    render_table,
    render_mapping
)

__all__ = [
    'OUTPUT_FORMATS',
    'jsonable',
    'render_json',
    'records_frame',
    'render_table',
    'render_mapping'
]
