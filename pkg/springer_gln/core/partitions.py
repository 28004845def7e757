"""
Partition arithmetic.

Partitions are stored normalized (no zero parts). Operations that index past
the last part treat the missing parts as zero.
"""

import logging
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import NamedTuple, Tuple

from springer_gln.core.exceptions import PartitionError

# Configure logging
logger = logging.getLogger(__name__)

_PARTITION_TEXT = re.compile(r"^\[([1-9][0-9]*(,[1-9][0-9]*)*)?\]$")


class Block(NamedTuple):
    """A run of equal parts: ``value`` repeated ``multiplicity`` times."""

    value: int
    multiplicity: int


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    Attributes:
        parts: The parts, largest first; the empty tuple is the empty partition
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        for i, part in enumerate(parts):
            if not isinstance(part, int) or part < 1:
                raise PartitionError(f"parts must be positive integers, got {parts}")
            if i and parts[i - 1] < part:
                raise PartitionError(f"parts must be weakly decreasing, got {parts}")

    @classmethod
    def from_parts(cls, parts):
        """Build a partition from any sequence, dropping zero parts."""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """Return the i-th part (0-based), zero past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return format_partition(self)


def format_partition(lam):
    """Render a partition as ``[4,2,2,1]``; the empty partition is ``[]``."""
    return "[" + ",".join(str(p) for p in lam.parts) + "]"


def parse_partition(text):
    """Parse the bracketed partition text form.

    Args:
        text: Text such as ``[3,1,1]`` or ``[]``

    Returns:
        Partition: The parsed partition

    Raises:
        PartitionError: If the text is malformed or not weakly decreasing
    """
    stripped = text.strip().replace(" ", "")
    if not _PARTITION_TEXT.match(stripped):
        raise PartitionError(f"malformed partition text: {text!r}")
    body = stripped[1:-1]
    parts = tuple(int(p) for p in body.split(",")) if body else ()
    return Partition(parts)


def n_invariant(lam):
    """Return n(lambda) = sum of (i-1) * lambda_i over 1-based rows."""
    return sum(i * part for i, part in enumerate(lam.parts))


@lru_cache(maxsize=None)
def _partitions_bounded(m, largest):
    if m == 0:
        return ((),)
    result = []
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_bounded(m - first, first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def enumerate_partitions(m):
    """Return all partitions of m in reverse lexicographic order.

    Args:
        m: Nonnegative integer

    Returns:
        tuple: Partition objects, starting with (m) and ending with (1^m)
    """
    if m < 0:
        raise PartitionError(f"cannot enumerate partitions of negative size {m}")
    return tuple(Partition(parts) for parts in _partitions_bounded(m, m))


def dominance_leq(mu, lam):
    """Return True iff mu is dominated by lam (prefix sums of mu never exceed lam's)."""
    if mu.size != lam.size:
        raise PartitionError(f"dominance needs equal sizes, got {mu.size} and {lam.size}")
    mu_sums = accumulate(a for a, _ in zip_longest(mu.parts, lam.parts, fillvalue=0))
    lam_sums = accumulate(b for _, b in zip_longest(mu.parts, lam.parts, fillvalue=0))
    return all(s <= t for s, t in zip(mu_sums, lam_sums))


@lru_cache(maxsize=None)
def blocks(lam):
    """Group equal parts: (4,2,2,1) gives ((4,1),(2,2),(1,1))."""
    result = []
    for part in lam.parts:
        if result and result[-1].value == part:
            result[-1] = Block(part, result[-1].multiplicity + 1)
        else:
            result.append(Block(part, 1))
    return tuple(result)


def from_blocks(block_form):
    """Inverse of :func:`blocks`."""
    parts = []
    for value, multiplicity in block_form:
        parts.extend([value] * multiplicity)
    return Partition(tuple(parts))


def is_even(lam):
    """True iff every part is even; the empty partition counts as even."""
    return all(part % 2 == 0 for part in lam.parts)


def conjugate(lam):
    """Return the transposed partition."""
    if not lam:
        return Partition()
    return Partition(tuple(sum(1 for part in lam.parts if part > j) for j in range(lam.parts[0])))


def add_twice(nu, mu):
    """Return the row-wise sum nu + 2*mu.

    Raises:
        PartitionError: If the padded sum is not weakly decreasing
    """
    rows = tuple(a + 2 * b for a, b in zip_longest(nu.parts, mu.parts, fillvalue=0))
    for i in range(1, len(rows)):
        if rows[i - 1] < rows[i]:
            raise PartitionError(
                f"{format_partition(nu)} + 2*{format_partition(mu)} is not monotone: {rows}"
            )
    return Partition(rows)


def box_removals(mu):
    """Return the set of partitions obtained by removing one corner box of mu."""
    if not mu:
        raise PartitionError("cannot remove a box from the empty partition")
    parts = mu.parts
    result = set()
    for i, part in enumerate(parts):
        if i + 1 == len(parts) or parts[i + 1] < part:
            result.add(Partition.from_parts(parts[:i] + (part - 1,) + parts[i + 1:]))
    return frozenset(result)


def hook_dimension(mu):
    """Dimension of the symmetric-group irreducible labeled by mu (hook length formula)."""
    transposed = conjugate(mu)
    hooks = math.prod(
        (part - j - 1) + (transposed.parts[j] - i - 1) + 1
        for i, part in enumerate(mu.parts)
        for j in range(part)
    )
    return math.factorial(mu.size) // hooks
