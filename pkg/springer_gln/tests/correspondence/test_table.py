"""Tests for the correspondence table."""

from itertools import zip_longest

import pytest

from springer_gln.core.exceptions import GammaError
from springer_gln.core.partitions import enumerate_partitions, n_invariant
from springer_gln.correspondence.table import (
    correspondence_table,
    induced_orbit,
    sign_rep_orbit,
    unit_rep_orbit,
    verify_round_trips,
)
from springer_gln.orbits.catalog import GroupContext, enumerate_pairs, orbit_dimension
from springer_gln.orbits.labels import parse_orbit
from springer_gln.series.cuspidal import CuspidalDatum, enumerate_series, gamma


@pytest.fixture
def principal_series():
    """The series of N0 = 1 through the regular orbit of SO_1"""
    return CuspidalDatum(1, parse_orbit("[1]"), (1,))


class TestCorrespondenceTable:
    """Tests for correspondence_table."""

    @pytest.mark.parametrize("N", range(0, 13))
    def test_bijection(self, N):
        """Test that rows cover Psi_N exactly once."""
        rows = correspondence_table(N)
        assert len(rows) == len(enumerate_pairs(N))
        assert {row.pair for row in rows} == set(enumerate_pairs(N))

    def test_row_order(self):
        """Test that rows follow series order, then mu."""
        rows = correspondence_table(5)
        series = enumerate_series(5)
        positions = [series.index(row.series) for row in rows]
        assert positions == sorted(positions)
        assert [str(row.pair) for row in rows[:2]] == ["[5];+", "[3,2];++"]

    @pytest.mark.parametrize("N", range(0, 13))
    def test_round_trips(self, N):
        """Test that cuspidal_support inverts gamma on every row."""
        assert verify_round_trips(N) == []


class TestInducedOrbits:
    """Tests for the unit and sign representation orbits."""

    def test_unit_and_sign(self, principal_series):
        """Test that (a) gives the regular orbit, (1^a) the rows 3, 2."""
        assert str(unit_rep_orbit(principal_series, 5)) == "[5];+"
        assert str(sign_rep_orbit(principal_series, 5)) == "[3,2];++"

    def test_induced_orbit(self, principal_series, partition):
        """Test Jordan type nu + 2 mu."""
        assert str(induced_orbit(principal_series, partition(1, 1), 5)) == "[3,2]"

    def test_induced_orbit_split(self, partition):
        """Test that the split tag comes from nu."""
        datum = CuspidalDatum(2, parse_orbit("[2]-"), (-1,))
        assert str(induced_orbit(datum, partition(1), 4)) == "[4]-"

    def test_wrong_size(self, principal_series, partition):
        """Test that mu must be a partition of a."""
        with pytest.raises(GammaError):
            induced_orbit(principal_series, partition(3), 5)


class TestSeriesInvariants:
    """Tests for the row structure of gamma(c, mu) over whole series."""

    @pytest.mark.parametrize("N", range(0, 13))
    def test_induced_orbit_matches_gamma(self, N):
        """Test that induced_orbit is the orbit of gamma(c, mu) for every c and mu."""
        for datum in enumerate_series(N):
            for mu in enumerate_partitions(datum.rank(N)):
                assert induced_orbit(datum, mu, N) == gamma(datum, mu, N).orbit

    @pytest.mark.parametrize("N", range(0, 13))
    def test_rows_differ_by_even_amounts(self, N):
        """Test that lambda_i - nu_i is even in every row."""
        for datum in enumerate_series(N):
            for mu in enumerate_partitions(datum.rank(N)):
                lam = gamma(datum, mu, N).lam
                rows = zip_longest(lam.parts, datum.nu.lam.parts, fillvalue=0)
                assert all((a - b) % 2 == 0 for a, b in rows)

    @pytest.mark.parametrize("N", range(0, 13))
    def test_jordan_type_monotone(self, N):
        """Test that n(mu') > n(mu) implies n(nu + 2 mu') > n(nu + 2 mu)."""
        for datum in enumerate_series(N):
            mus = enumerate_partitions(datum.rank(N))
            n_of = {mu: n_invariant(induced_orbit(datum, mu, N).lam) for mu in mus}
            for mu in mus:
                for other in mus:
                    if n_invariant(other) > n_invariant(mu):
                        assert n_of[other] > n_of[mu]

    @pytest.mark.parametrize("N", range(0, 13))
    def test_unit_rep_orbit_dimension(self, N):
        """Test that the unit representation gives the open orbit, of dimension dim H - n(nu)."""
        ctx = GroupContext(N)
        for datum in enumerate_series(N):
            lam = unit_rep_orbit(datum, N).lam
            assert orbit_dimension(ctx, lam) == ctx.dim_H - n_invariant(datum.nu.lam)
