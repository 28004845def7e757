"""Tests for the golden correspondence tables."""

import pytest

from springer_gln.core.exceptions import SpringerError
from springer_gln.correspondence.appendix import APPENDIX_SIZES, load_appendix, verify_appendix
from springer_gln.orbits.catalog import enumerate_pairs


class TestAppendix:
    """Tests for loading and comparing the fixtures."""

    @pytest.mark.parametrize("N", APPENDIX_SIZES)
    def test_fixture_covers_psi(self, N):
        """Test that each fixture has one row per pair."""
        rows = load_appendix(N)
        assert len(rows) == len(enumerate_pairs(N))

    @pytest.mark.parametrize("N", APPENDIX_SIZES)
    def test_matches_computation(self, N):
        """Test that the computed table agrees with the fixture."""
        report = verify_appendix(N)
        assert report.ok, report.to_dict()
        assert report.expected_rows == report.computed_rows

    def test_no_fixture(self):
        """Test that only N = 2..7 have fixtures."""
        with pytest.raises(SpringerError):
            load_appendix(8)
