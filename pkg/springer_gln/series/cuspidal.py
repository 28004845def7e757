"""
Cuspidal pairs, series data and the series maps.

A series is a cuspidal pair xi = (nu, sigma) of Psi_{N0}. For N with
N - N0 = 2a, the map gamma sends a partition mu of a to the pair with rows
lambda_i = nu_i + 2 mu_i and the signs of sigma (extended by + on new rows).
cuspidal_support inverts it by repeatedly shortening a row by 2.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import NamedTuple

from springer_gln.core.exceptions import (
    GammaError,
    LabelSemanticError,
    LabelSyntaxError,
    PartitionError,
    VerificationError,
)
from springer_gln.core.partitions import Partition, blocks, enumerate_partitions, format_partition
from springer_gln.orbits.catalog import (
    PLUS,
    OrbitLabel,
    PairLabel,
    enumerate_orbits,
    enumerate_pairs,
    format_signs,
    requires_split,
    valid_sign_vectors,
)
from springer_gln.orbits.labels import orbit_from_json, orbit_to_json, parse_orbit, parse_signs

# Configure logging
logger = logging.getLogger(__name__)

_SERIES_TEXT = re.compile(r"^N0=(0|[1-9][0-9]*)\s+nu=(\S+)\s+sigma=([+-]*)$", re.ASCII)


def is_cuspidal(pair):
    """True iff consecutive part gaps are at most 2 with a sign change at every gap of 2.

    The part after the last one is 0 and carries the sign +.
    """
    block_form = blocks(pair.lam)
    for index, (block, sign) in enumerate(zip(block_form, pair.tau)):
        if index + 1 < len(block_form):
            next_value, next_sign = block_form[index + 1].value, pair.tau[index + 1]
        else:
            next_value, next_sign = 0, PLUS
        gap = block.value - next_value
        if gap > 2 or (gap == 2 and sign == next_sign):
            return False
    return True


@dataclass(frozen=True)
class CuspidalDatum:
    """A series: the triple (N0, nu, sigma) with (nu, sigma) cuspidal in Psi_{N0}."""

    N0: int
    nu: OrbitLabel
    sigma: tuple

    def __post_init__(self):
        object.__setattr__(self, 'sigma', tuple(self.sigma))
        if self.nu.N != self.N0:
            raise LabelSemanticError(f"nu={self.nu} is not a partition of N0={self.N0}")
        if not is_cuspidal(self.xi):
            raise LabelSemanticError(f"({self.nu};{format_signs(self.sigma)}) is not cuspidal")

    @property
    def xi(self):
        return PairLabel(self.nu, self.sigma)

    def rank(self, N):
        """Return a = (N - N0)/2, the rank of the relative Weyl group S_a."""
        if N < self.N0 or (N - self.N0) % 2:
            raise PartitionError(f"series with N0={self.N0} does not occur for N={N}")
        return (N - self.N0) // 2

    def __str__(self):
        return format_series(self)

    @classmethod
    def from_pair(cls, pair):
        return cls(pair.N, pair.orbit, pair.tau)


class SeriesMembership(NamedTuple):
    """Position of a pair in the correspondence: its series and S_a-label."""

    datum: CuspidalDatum
    mu: Partition


def format_series(datum):
    return f"N0={datum.N0} nu={datum.nu} sigma={format_signs(datum.sigma)}"


def _parse_field(parser, match, group, text, offset):
    try:
        return parser(match.group(group))
    except LabelSyntaxError as e:
        raise LabelSyntaxError(e.message, text, offset + match.start(group) + e.position) from e


def parse_series(text):
    """Parse ``N0=<int> nu=<orbit> sigma=<signs>``.

    Raises:
        LabelSyntaxError: If the text does not have the three fields
        LabelSemanticError: If the fields do not form a cuspidal datum
    """
    match = _SERIES_TEXT.match(text.strip())
    if not match:
        raise LabelSyntaxError("expected 'N0=<int> nu=<orbit> sigma=<signs>'", text, 0)
    offset = len(text) - len(text.lstrip())
    nu = _parse_field(parse_orbit, match, 2, text, offset)
    sigma = _parse_field(parse_signs, match, 3, text, offset)
    return CuspidalDatum(int(match.group(1)), nu, sigma)


def series_to_json(datum):
    return {"N0": datum.N0, "nu": orbit_to_json(datum.nu), "sigma": list(datum.sigma)}


def series_from_json(data):
    try:
        return CuspidalDatum(int(data["N0"]), orbit_from_json(data["nu"]), tuple(data["sigma"]))
    except (KeyError, TypeError, ValueError) as e:
        raise LabelSemanticError(f"malformed series JSON {data!r}: {e}") from e


def _has_cuspidal_gaps(lam):
    values = [block.value for block in blocks(lam)] + [0]
    return all(values[i] - values[i + 1] <= 2 for i in range(len(values) - 1))


@lru_cache(maxsize=None)
def enumerate_cuspidal(N):
    """Return Psi_N^(0), the cuspidal pairs of Psi_N, in enumerate_pairs order."""
    cuspidal = []
    for orbit in enumerate_orbits(N):
        if not _has_cuspidal_gaps(orbit.lam):
            continue
        for tau in valid_sign_vectors(orbit.lam):
            pair = PairLabel(orbit, tau)
            if is_cuspidal(pair):
                cuspidal.append(pair)
    logger.debug(f"N={N}: {len(cuspidal)} cuspidal pairs")
    return tuple(cuspidal)


@lru_cache(maxsize=None)
def enumerate_series(N):
    """Return C_N ordered by N0 ascending, then by Psi_{N0}^(0) order."""
    return tuple(
        CuspidalDatum.from_pair(xi)
        for N0 in range(N % 2, N + 1, 2)
        for xi in enumerate_cuspidal(N0)
    )


def _block_signs(rows, row_signs, context):
    signs = []
    previous = None
    for value, sign in zip(rows, row_signs):
        if value == previous:
            if signs[-1] != sign:
                raise GammaError(f"{context}: rows of length {value} carry different signs")
        else:
            signs.append(sign)
            previous = value
    return tuple(signs)


def gamma(datum, mu, N=None):
    """Return the pair (nu + 2 mu, sigma) of Psi_N.

    Args:
        datum: The series
        mu: Partition of a = (N - N0)/2
        N: Ambient size; inferred from mu when omitted

    Raises:
        GammaError: If nu + 2 mu is not monotone or two rows of equal length
            inherit different signs
    """
    if N is not None and mu.size != datum.rank(N):
        raise GammaError(f"mu={format_partition(mu)} has size {mu.size}, expected {datum.rank(N)}")
    nu_rows = datum.nu.lam.parts
    nu_signs = datum.xi.row_signs()
    rows = []
    row_signs = []
    for index, (nu_part, mu_part) in enumerate(zip_longest(nu_rows, mu.parts, fillvalue=0)):
        value = nu_part + 2 * mu_part
        if rows and rows[-1] < value:
            raise GammaError(f"{format_partition(datum.nu.lam)} + 2*{format_partition(mu)} is not monotone")
        rows.append(value)
        row_signs.append(nu_signs[index] if index < len(nu_signs) else PLUS)
    context = f"gamma({datum}, {format_partition(mu)})"
    tau = _block_signs(rows, row_signs, context)
    lam = Partition(tuple(rows))
    split = datum.nu.split if requires_split(lam) else None
    return PairLabel(OrbitLabel(lam, split), tau)


def _strip_candidates(rows, row_signs):
    """Rows that may be shortened by 2: last rows of blocks with an admissible gap."""
    candidates = []
    for j, value in enumerate(rows):
        if j + 1 < len(rows):
            if rows[j + 1] == value:
                continue
            next_value, next_sign = rows[j + 1], row_signs[j + 1]
        else:
            next_value, next_sign = 0, PLUS
        gap = value - next_value
        if gap > 2 or (gap == 2 and row_signs[j] == next_sign):
            candidates.append(j)
    return candidates


def _strip(rows, row_signs, j):
    value = rows[j] - 2
    if value == 0:
        return rows[:j] + rows[j + 1:], row_signs[:j] + row_signs[j + 1:]
    return rows[:j] + (value,) + rows[j + 1:], row_signs


def _membership(pair, rows, row_signs):
    nu_lam = Partition(rows)
    lam_rows = pair.lam.parts
    mu = Partition.from_parts(
        (lam_rows[k] - nu_lam.part(k)) // 2 for k in range(len(lam_rows))
    )
    split = pair.split if requires_split(nu_lam) else None
    sigma = _block_signs(rows, row_signs, f"support of {pair}")
    return SeriesMembership(CuspidalDatum(nu_lam.size, OrbitLabel(nu_lam, split), sigma), mu)


def cuspidal_support(pair):
    """Return the series and S_a-label of a pair.

    Strips the last row of the smallest admissible block until the pair is
    cuspidal, then reads mu off row by row.

    Returns:
        SeriesMembership: (datum, mu) with gamma(datum, mu) == pair
    """
    rows, row_signs = pair.lam.parts, pair.row_signs()
    while True:
        candidates = _strip_candidates(rows, row_signs)
        if not candidates:
            break
        rows, row_signs = _strip(rows, row_signs, candidates[0])
    return _membership(pair, rows, row_signs)


def all_cuspidal_supports(pair):
    """Return the set of results over every admissible stripping order."""
    seen = {}

    def explore(rows, row_signs):
        key = (rows, row_signs)
        if key not in seen:
            candidates = _strip_candidates(rows, row_signs)
            if not candidates:
                seen[key] = frozenset([(rows, row_signs)])
            else:
                results = set()
                for j in candidates:
                    results |= explore(*_strip(rows, row_signs, j))
                seen[key] = frozenset(results)
        return seen[key]

    finals = explore(pair.lam.parts, pair.row_signs())
    return {_membership(pair, rows, row_signs) for rows, row_signs in finals}


@lru_cache(maxsize=None)
def series_partition(N):
    """Return the fibers of cuspidal_support over C_N.

    Returns:
        dict: CuspidalDatum -> tuple of PairLabel, each fiber ordered by mu

    Raises:
        VerificationError: If a support falls outside C_N or the fibers do not
            cover Psi_N exactly once
    """
    fibers = {datum: [] for datum in enumerate_series(N)}
    failures = []
    pairs = enumerate_pairs(N)
    for pair in pairs:
        datum, mu = cuspidal_support(pair)
        if datum not in fibers:
            failures.append(f"{pair}: support {datum} is not in C_{N}")
            continue
        fibers[datum].append((mu, pair))

    covered = sum(len(members) for members in fibers.values())
    if covered != len(pairs) and not failures:
        failures.append(f"fibers cover {covered} of {len(pairs)} pairs")
    if failures:
        logger.error(f"Series decomposition failed for N={N}: {failures[:5]}")
        raise VerificationError(f"series decomposition of Psi_{N} failed", failures)

    order = {mu: index for index, mu in enumerate(
        mu for a in range(N // 2 + 1) for mu in enumerate_partitions(a)
    )}
    return {
        datum: tuple(pair for _, pair in sorted(members, key=lambda item: order[item[0]]))
        for datum, members in fibers.items()
    }
