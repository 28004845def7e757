"""Tests for the branching cross-check."""

import pytest

from springer_gln.core.partitions import enumerate_partitions, hook_dimension
from springer_gln.orbits.labels import parse_orbit
from springer_gln.restriction.branching import (
    branching_consistency,
    branching_multiplicities,
    branching_sweep,
    restriction_row_sum,
)
from springer_gln.series.cuspidal import CuspidalDatum, enumerate_series


@pytest.fixture
def principal_series():
    """The series of N0 = 1 through the regular orbit of SO_1"""
    return CuspidalDatum(1, parse_orbit("[1]"), (1,))


class TestBranching:
    """Tests for restriction against box removal."""

    def test_multiplicities(self, principal_series, partition):
        """Test that (2,1) -> (2) removes a box and restricts with multiplicity 1."""
        assert branching_multiplicities(principal_series, partition(2, 1), partition(2), 7) == (1, 1)
        assert branching_multiplicities(principal_series, partition(3), partition(1, 1), 7) == (0, 0)
        assert branching_consistency(principal_series, partition(3), partition(2), 7)

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_row_sum(self, principal_series, a):
        """Test that restricted dimensions add up to dim mu."""
        for mu in enumerate_partitions(a):
            assert restriction_row_sum(principal_series, mu, 1 + 2 * a) == hook_dimension(mu)

    @pytest.mark.parametrize("N", range(2, 11))
    def test_row_sum_every_series(self, N):
        """Test the row sums over every series with a >= 1."""
        for datum in enumerate_series(N):
            a = datum.rank(N)
            if a == 0:
                continue
            for mu in enumerate_partitions(a):
                assert restriction_row_sum(datum, mu, N) == hook_dimension(mu)

    def test_sweep(self):
        """Test that no mismatch occurs up to N = 10."""
        report = branching_sweep(10)
        assert report.ok, report.failures
        assert report.max_n == 10
        assert report.checked > 0
