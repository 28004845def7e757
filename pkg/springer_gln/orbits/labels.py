"""
Text and JSON forms of orbit and pair labels.

Grammar::

    pair    := orbit ";" signs
    orbit   := "[" parts? "]" split?
    parts   := int ("," int)*
    split   := "+" | "-"
    signs   := ("+" | "-")*

The sign string may be empty only for the empty partition.
"""

import logging

from springer_gln.core.exceptions import LabelSemanticError, LabelSyntaxError, PartitionError
from springer_gln.core.partitions import Partition
from springer_gln.orbits.catalog import MINUS, PLUS, OrbitLabel, PairLabel, Split, format_signs

# Configure logging
logger = logging.getLogger(__name__)

GRAMMAR_HELP = """\
Label grammar:
    pair    := orbit ";" signs
    orbit   := "[" parts? "]" split?
    parts   := int ("," int)*          weakly decreasing positive integers
    split   := "+" | "-"               only when N and every part are even
    signs   := ("+" | "-")+            one sign per distinct part, largest first
Examples: [4,2,1];--+   [2,2]+;-   []+;
Series:   N0=<int> nu=<orbit> sigma=<signs>   e.g. N0=1 nu=[1] sigma=+
"""

DIGITS = "0123456789"


class _Scanner:
    """Character cursor over label text; positions index the text as given."""

    def __init__(self, text):
        self.text = text
        self.pos = len(text) - len(text.lstrip())
        self.end = len(text.rstrip())

    def peek(self):
        return self.text[self.pos] if self.pos < self.end else ""

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise LabelSyntaxError(f"expected {char!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def integer(self):
        start = self.pos
        while self.peek() and self.peek() in DIGITS:
            self.pos += 1
        if start == self.pos:
            raise LabelSyntaxError("expected a part", self.text, self.pos)
        if self.text[start] == "0" and self.pos - start > 1:
            raise LabelSyntaxError("leading zero in a part", self.text, start)
        return int(self.text[start:self.pos])

    def at_end(self):
        return self.pos >= self.end


def _scan_orbit(scanner):
    scanner.expect("[")
    parts = []
    if scanner.peek() != "]":
        parts.append(scanner.integer())
        while scanner.peek() == ",":
            scanner.pos += 1
            parts.append(scanner.integer())
    scanner.expect("]")
    split = None
    if scanner.peek() in ("+", "-"):
        split = Split(scanner.peek())
        scanner.pos += 1
    try:
        lam = Partition(tuple(parts))
    except PartitionError as e:
        raise LabelSemanticError(str(e)) from e
    return OrbitLabel(lam, split)


def _scan_signs(scanner):
    signs = []
    while scanner.peek() in ("+", "-"):
        signs.append(PLUS if scanner.peek() == "+" else MINUS)
        scanner.pos += 1
    return tuple(signs)


def parse_orbit(text):
    """Parse an orbit label such as ``[2,2]+``."""
    scanner = _Scanner(text)
    orbit = _scan_orbit(scanner)
    if not scanner.at_end():
        raise LabelSyntaxError("unexpected trailing text", scanner.text, scanner.pos)
    return orbit


def parse_signs(text):
    """Parse a bare sign string such as ``--+``."""
    scanner = _Scanner(text)
    signs = _scan_signs(scanner)
    if not scanner.at_end():
        raise LabelSyntaxError("expected '+' or '-'", scanner.text, scanner.pos)
    return signs


def parse_label(text):
    """Parse a pair label such as ``[4,2,1];--+``.

    Args:
        text: Label text

    Returns:
        PairLabel: The parsed pair

    Raises:
        LabelSyntaxError: With the column of the first offending character
        LabelSemanticError: If the label parses but is not a valid pair
    """
    scanner = _Scanner(text)
    orbit = _scan_orbit(scanner)
    scanner.expect(";")
    tau = _scan_signs(scanner)
    if not scanner.at_end():
        raise LabelSyntaxError("expected '+' or '-'", scanner.text, scanner.pos)
    label = PairLabel(orbit, tau)
    logger.debug(f"Parsed label {text!r} as {label}")
    return label


def format_label(pair):
    """Inverse of :func:`parse_label`."""
    return f"{pair.orbit};{format_signs(pair.tau)}"


def orbit_to_json(orbit):
    return {
        "lambda": list(orbit.lam.parts),
        "split": orbit.split.value if orbit.split else None,
    }


def pair_to_json(pair):
    """JSON form ``{"lambda": [...], "split": null|"+"|"-", "tau": [...]}``."""
    data = orbit_to_json(pair.orbit)
    data["tau"] = list(pair.tau)
    return data


def orbit_from_json(data):
    try:
        lam = Partition(tuple(data["lambda"]))
        split = Split(data["split"]) if data.get("split") is not None else None
    except (KeyError, TypeError, ValueError) as e:
        raise LabelSemanticError(f"malformed orbit JSON {data!r}: {e}") from e
    return OrbitLabel(lam, split)


def pair_from_json(data):
    orbit = orbit_from_json(data)
    try:
        tau = tuple(data["tau"])
    except (KeyError, TypeError) as e:
        raise LabelSemanticError(f"malformed pair JSON {data!r}: {e}") from e
    return PairLabel(orbit, tau)
