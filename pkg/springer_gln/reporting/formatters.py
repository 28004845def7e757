"""
Rendering of command results as aligned text, CSV or a JSON envelope.

Tables go through a pandas DataFrame; JSON output always has the shape
``{"command": ..., "inputs": {...}, "results": ...}``. Every rendering ends
with exactly one newline.
"""

import json
import logging
from enum import Enum
from fractions import Fraction

import pandas as pd

# Configure logging
logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json", "csv")


def jsonable(value):
    """Convert results to plain JSON types; Fractions become ints or ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [jsonable(item) for item in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    return value


def render_json(command, inputs, results):
    envelope = {"command": command, "inputs": jsonable(inputs), "results": jsonable(results)}
    return json.dumps(envelope, indent=2, ensure_ascii=False) + "\n"


def records_frame(records, columns):
    """Build a DataFrame with a fixed column order; cells are stringified."""
    rows = [[_cell(record.get(column)) for column in columns] for record in records]
    return pd.DataFrame(rows, columns=list(columns))


def _cell(value):
    value = jsonable(value)
    if isinstance(value, list):
        return " ".join(str(item) for item in value)
    if isinstance(value, bool):
        return "yes" if value else "no"
    return "" if value is None else str(value)


def render_table(command, inputs, records, columns, output_format):
    """Render a list of row dicts.

    Args:
        command: Command name for the JSON envelope
        inputs: Dict of resolved inputs
        records: List of dicts keyed by column name
        columns: Column order for text and CSV
        output_format: One of OUTPUT_FORMATS

    Returns:
        str: The rendered output
    """
    if output_format == "json":
        return render_json(command, inputs, records)
    frame = records_frame(records, columns)
    if output_format == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if frame.empty:
        return "(no rows)\n"
    return frame.to_string(index=False) + "\n"


def render_mapping(command, inputs, mapping, output_format):
    """Render a flat key/value result; CSV uses the columns ``key,value``."""
    if output_format == "json":
        return render_json(command, inputs, mapping)
    records = [{"key": key, "value": value} for key, value in mapping.items()]
    frame = records_frame(records, ("key", "value"))
    if output_format == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    width = max((len(str(key)) for key in mapping), default=0)
    return "".join(f"{str(key).ljust(width)}  {_cell(value)}\n" for key, value in mapping.items())
