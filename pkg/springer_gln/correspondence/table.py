"""
The generalized Springer correspondence table.

Every pair of Psi_N is reached exactly once as gamma(c, mu) with c in C_N and
mu a partition of a = (N - N0)/2, the label of an irreducible of S_a.
"""

import logging
from collections import Counter
from typing import NamedTuple

from springer_gln.core.exceptions import GammaError, PartitionError, VerificationError
from springer_gln.core.partitions import Partition, add_twice, enumerate_partitions, format_partition
from springer_gln.orbits.catalog import OrbitLabel, PairLabel, enumerate_pairs, requires_split
from springer_gln.series.cuspidal import (
    CuspidalDatum,
    cuspidal_support,
    enumerate_series,
    gamma,
)

# Configure logging
logger = logging.getLogger(__name__)


class CorrespondenceRow(NamedTuple):
    """One element of Psi_N together with its series and S_a-label."""

    pair: PairLabel
    series: CuspidalDatum
    mu: Partition


def correspondence_table(N):
    """Build the correspondence table for Psi_N.

    Rows are ordered by series (enumerate_series order), then by mu in
    reverse lexicographic order.

    Raises:
        VerificationError: If some mu fails to label a pair, or the rows do not
            cover Psi_N exactly once
    """
    rows = []
    failures = []
    for datum in enumerate_series(N):
        a = datum.rank(N)
        for mu in enumerate_partitions(a):
            try:
                rows.append(CorrespondenceRow(gamma(datum, mu, N), datum, mu))
            except GammaError as e:
                failures.append(str(e))

    counts = Counter(row.pair for row in rows)
    failures.extend(f"{pair} appears {count} times" for pair, count in counts.items() if count > 1)
    failures.extend(f"{pair} is missing" for pair in enumerate_pairs(N) if pair not in counts)
    if failures:
        logger.error(f"Correspondence table for N={N} is not a bijection: {failures[:5]}")
        raise VerificationError(f"correspondence table for N={N} is not a bijection", failures)

    logger.debug(f"N={N}: {len(rows)} correspondence rows over {len(enumerate_series(N))} series")
    return tuple(rows)


def verify_round_trips(N):
    """Check cuspidal_support and gamma are mutually inverse on Psi_N.

    Returns:
        list: Descriptions of every failing pair (empty on success)
    """
    failures = []
    for row in correspondence_table(N):
        support = cuspidal_support(row.pair)
        if support != (row.series, row.mu):
            failures.append(f"{row.pair}: support {support.datum} {support.mu}, expected {row.series} {row.mu}")
    return failures


def unit_rep_orbit(datum, N):
    """Pair attached to the unit representation of S_a: gamma(c, (a))."""
    a = datum.rank(N)
    return gamma(datum, Partition((a,) if a else ()), N)


def sign_rep_orbit(datum, N):
    """Pair attached to the sign representation of S_a: gamma(c, (1^a))."""
    return gamma(datum, Partition((1,) * datum.rank(N)), N)


def induced_orbit(datum, mu, N):
    """Orbit induced from the Levi orbit nu by the S_a-label mu: Jordan type nu + 2 mu.

    Raises:
        GammaError: If mu has the wrong size or nu + 2 mu is not monotone
    """
    if mu.size != datum.rank(N):
        raise GammaError(f"mu={format_partition(mu)} has size {mu.size}, expected {datum.rank(N)}")
    try:
        lam = add_twice(datum.nu.lam, mu)
    except PartitionError as e:
        raise GammaError(str(e)) from e
    return OrbitLabel(lam, datum.nu.split if requires_split(lam) else None)
