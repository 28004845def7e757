"""
Branching cross-check.

Inside one series c, restricting the pair labeled by mu to the Levi
GL_1 x SO_{N-2} meets the pair labeled by mu' exactly when mu' is obtained
from mu by removing one box, the classical S_a -> S_{a-1} branching rule.
"""

import logging
from typing import NamedTuple

from tqdm import tqdm

from springer_gln.core.partitions import box_removals, enumerate_partitions, format_partition, hook_dimension
from springer_gln.restriction.procedures import epsilon_multiplicity
from springer_gln.series.cuspidal import enumerate_series, gamma

# Configure logging
logger = logging.getLogger(__name__)


class BranchingReport(NamedTuple):
    max_n: int
    checked: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def branching_multiplicities(datum, mu, mu_p, N):
    """Return (box-removal multiplicity, restriction multiplicity) for mu -> mu'."""
    by_boxes = 1 if mu_p in box_removals(mu) else 0
    by_restriction = epsilon_multiplicity(gamma(datum, mu, N), gamma(datum, mu_p, N - 2))
    return by_boxes, by_restriction


def branching_consistency(datum, mu, mu_p, N):
    """True iff both multiplicities of :func:`branching_multiplicities` agree."""
    by_boxes, by_restriction = branching_multiplicities(datum, mu, mu_p, N)
    if by_boxes != by_restriction:
        logger.error(
            f"Branching mismatch in {datum}: {format_partition(mu)} -> {format_partition(mu_p)} "
            f"boxes={by_boxes} restriction={by_restriction}"
        )
        return False
    return True


def restriction_row_sum(datum, mu, N):
    """Sum of hook_dimension(mu') weighted by restriction multiplicity."""
    pair = gamma(datum, mu, N)
    return sum(
        hook_dimension(mu_p) * epsilon_multiplicity(pair, gamma(datum, mu_p, N - 2))
        for mu_p in enumerate_partitions(mu.size - 1)
    )


def branching_sweep(max_n, progress=False):
    """Check branching consistency for all N <= max_n, all series with a >= 1 and all mu, mu'.

    Args:
        max_n: Largest N to check
        progress: Show a progress bar on stderr

    Returns:
        BranchingReport: Number of checked triples and the failing ones
    """
    checked = 0
    failures = []
    for N in tqdm(range(2, max_n + 1), desc="branching", disable=not progress):
        for datum in enumerate_series(N):
            a = datum.rank(N)
            if a == 0:
                continue
            for mu in enumerate_partitions(a):
                for mu_p in enumerate_partitions(a - 1):
                    checked += 1
                    if not branching_consistency(datum, mu, mu_p, N):
                        failures.append(f"N={N} {datum} {format_partition(mu)} -> {format_partition(mu_p)}")
    logger.info(f"Branching sweep up to N={max_n}: {checked} checks, {len(failures)} failures")
    return BranchingReport(max_n, checked, failures)
