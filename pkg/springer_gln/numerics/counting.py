"""
Generating functions and counting identities.

    prod 1/(1 - t^i)   = sum p(n) t^n
    prod (1 + t^i)^2   = sum q1(n) t^n
    prod (1 + t^{2i})  = sum q2(n) t^n

All series are truncated at an explicit degree (64 by default).
"""

import logging
from functools import lru_cache, reduce
from operator import mul
from typing import NamedTuple, Tuple

from tqdm import tqdm

from springer_gln.core.exceptions import SpringerError, VerificationError
from springer_gln.core.partitions import is_even
from springer_gln.orbits.catalog import enumerate_pairs
from springer_gln.series.cuspidal import enumerate_cuspidal

# Configure logging
logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 64


class PowerSeries:
    """Integer power series truncated at ``degree`` (coefficients of t^0..t^degree)."""

    def __init__(self, coefficients, degree):
        coefficients = list(coefficients)[:degree + 1]
        coefficients.extend([0] * (degree + 1 - len(coefficients)))
        self.coefficients: Tuple[int, ...] = tuple(coefficients)
        self.degree = degree

    @classmethod
    def one(cls, degree):
        return cls([1], degree)

    @classmethod
    def geometric(cls, step, degree):
        """1/(1 - t^step)."""
        return cls([1 if k % step == 0 else 0 for k in range(degree + 1)], degree)

    @classmethod
    def binomial(cls, step, degree):
        """1 + t^step."""
        coefficients = [0] * (degree + 1)
        coefficients[0] = 1
        if step <= degree:
            coefficients[step] += 1
        return cls(coefficients, degree)

    def __getitem__(self, k):
        if k < 0:
            return 0
        if k > self.degree:
            raise SpringerError(f"coefficient t^{k} is beyond the truncation degree {self.degree}")
        return self.coefficients[k]

    def __mul__(self, other):
        degree = min(self.degree, other.degree)
        product = [0] * (degree + 1)
        for i, a in enumerate(self.coefficients[:degree + 1]):
            if a:
                for j, b in enumerate(other.coefficients[:degree + 1 - i]):
                    product[i + j] += a * b
        return PowerSeries(product, degree)

    def __eq__(self, other):
        return isinstance(other, PowerSeries) and (self.degree, self.coefficients) == (
            other.degree, other.coefficients
        )

    def __repr__(self):
        return f"PowerSeries({list(self.coefficients[:8])}..., degree={self.degree})"


@lru_cache(maxsize=None)
def partition_series(degree=DEFAULT_DEGREE):
    return reduce(mul, (PowerSeries.geometric(i, degree) for i in range(1, degree + 1)), PowerSeries.one(degree))


@lru_cache(maxsize=None)
def q1_series(degree=DEFAULT_DEGREE):
    factors = (PowerSeries.binomial(i, degree) for i in range(1, degree + 1))
    square = reduce(mul, factors, PowerSeries.one(degree))
    return square * square


@lru_cache(maxsize=None)
def q2_series(degree=DEFAULT_DEGREE):
    return reduce(mul, (PowerSeries.binomial(2 * i, degree) for i in range(1, degree // 2 + 1)), PowerSeries.one(degree))


def partition_count(m, degree=DEFAULT_DEGREE):
    return partition_series(degree)[m]


def q1(m, degree=DEFAULT_DEGREE):
    return q1_series(degree)[m]


def q2(m, degree=DEFAULT_DEGREE):
    return q2_series(degree)[m]


def cuspidal_count(N, degree=DEFAULT_DEGREE):
    """Closed-form number of cuspidal pairs in Psi_N.

    q1(N)/2 for N odd, (q1(N) + 3 q2(N))/2 for N even; N = 0 gives 2 and
    N = 1 gives 1 by convention.

    Raises:
        VerificationError: If the numerator is odd
    """
    if N == 0:
        return 2
    if N == 1:
        return 1
    numerator = q1(N, degree) if N % 2 else q1(N, degree) + 3 * q2(N, degree)
    if numerator % 2:
        logger.error(f"Cuspidal count numerator {numerator} is odd for N={N}")
        raise VerificationError(f"cuspidal count for N={N} is not an integer: {numerator}/2")
    return numerator // 2


class TotalCountReport(NamedTuple):
    N: int
    pairs: int
    by_series: int

    @property
    def ok(self):
        return self.pairs == self.by_series


def total_count_identity(N, degree=DEFAULT_DEGREE):
    """|Psi_N| against sum over a of p(a) |Psi^(0)_{N-2a}|, both by enumeration."""
    by_series = sum(
        partition_count(a, degree) * len(enumerate_cuspidal(N - 2 * a))
        for a in range(N // 2 + 1)
    )
    return TotalCountReport(N, len(enumerate_pairs(N)), by_series)


class SplitCountReport(NamedTuple):
    """Counts x' (pairs over non-even partitions) and x'' (over even ones, per H-orbit)."""

    N: int
    x_prime: int
    x_doubleprime: int
    lhs_q1: int
    rhs_q1: int
    lhs_q2: int
    rhs_q2: int

    @property
    def ok(self):
        return self.lhs_q1 == self.rhs_q1 and self.lhs_q2 == self.rhs_q2


def split_count_identities(N, degree=DEFAULT_DEGREE):
    """Check 2x' + x''/2 = sum p(a) q1(N-2a) and x''/2 = sum p(a) q2(N-2a), N >= 1."""
    if N < 1:
        raise SpringerError("split count identities start at N = 1")
    pairs = enumerate_pairs(N)
    x_doubleprime = sum(1 for pair in pairs if is_even(pair.lam))
    x_prime = len(pairs) - x_doubleprime
    rhs_q1 = sum(partition_count(a, degree) * q1(N - 2 * a, degree) for a in range(N // 2 + 1))
    rhs_q2 = sum(partition_count(a, degree) * q2(N - 2 * a, degree) for a in range(N // 2 + 1))
    report = SplitCountReport(
        N, x_prime, x_doubleprime,
        2 * x_prime + x_doubleprime // 2, rhs_q1,
        x_doubleprime // 2, rhs_q2,
    )
    if not report.ok:
        logger.error(f"Split count identities fail at N={N}: {report}")
    return report


class CountRow(NamedTuple):
    N: int
    pairs: int
    cuspidal: int
    formula: int
    match: bool


def count_table(max_n, degree=DEFAULT_DEGREE, progress=False):
    """Rows N, |Psi_N|, |Psi^(0)_N|, closed form and whether it matches, for N <= max_n."""
    rows = []
    for N in tqdm(range(max_n + 1), desc="count", disable=not progress):
        direct = len(enumerate_cuspidal(N))
        formula = cuspidal_count(N, degree)
        rows.append(CountRow(N, len(enumerate_pairs(N)), direct, formula, direct == formula))
    logger.info(f"Count table up to N={max_n}: {sum(not r.match for r in rows)} mismatches")
    return rows
