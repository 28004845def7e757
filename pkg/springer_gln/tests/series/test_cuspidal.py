"""Tests for cuspidal pairs and the series maps."""

import pytest

from springer_gln.core.exceptions import GammaError, LabelSemanticError, LabelSyntaxError, PartitionError
from springer_gln.orbits.catalog import PLUS, enumerate_pairs
from springer_gln.orbits.labels import parse_orbit
from springer_gln.series.cuspidal import (
    CuspidalDatum,
    all_cuspidal_supports,
    cuspidal_support,
    enumerate_cuspidal,
    enumerate_series,
    format_series,
    gamma,
    is_cuspidal,
    parse_series,
    series_from_json,
    series_partition,
    series_to_json,
)


def datum(N0, nu, sigma):
    return CuspidalDatum(N0, parse_orbit(nu), tuple(1 if s == "+" else -1 for s in sigma))


class TestIsCuspidal:
    """Tests for the cuspidality criterion."""

    @pytest.mark.parametrize("text,expected", [
        ("[1];+", True),
        ("[2,1];++", True),
        ("[2]+;-", True),
        ("[2]+;+", False),
        ("[3];+", False),
        ("[3,1];+-", True),
        ("[3,1];++", False),
        ("[2,2,1];-+", True),
        ("[]+;", True),
    ])
    def test_examples(self, label, text, expected):
        """Test gaps of at most 2 with a sign change at every gap of 2."""
        assert is_cuspidal(label(text)) is expected

    @pytest.mark.parametrize("N,count", [(0, 2), (1, 1), (2, 3), (3, 3), (4, 6), (5, 7), (6, 14), (7, 16)])
    def test_counts(self, N, count):
        """Test number of cuspidal pairs for small N."""
        assert len(enumerate_cuspidal(N)) == count

    @pytest.mark.parametrize("N,count", [(2, 5), (3, 4), (7, 27)])
    def test_series_counts(self, N, count):
        """Test that C_N collects the cuspidal pairs of every N0 of the parity of N."""
        series = enumerate_series(N)
        assert len(series) == count
        assert [d.N0 for d in series] == sorted(d.N0 for d in series)


class TestCuspidalDatum:
    """Tests for series data and their text form."""

    def test_rejects_non_cuspidal(self):
        """Test that the pair (nu, sigma) must be cuspidal."""
        with pytest.raises(LabelSemanticError):
            datum(3, "[3]", "+")

    def test_rejects_size_mismatch(self):
        """Test that nu must be a partition of N0."""
        with pytest.raises(LabelSemanticError):
            CuspidalDatum(2, parse_orbit("[1]"), (PLUS,))

    def test_rank(self):
        """Test that a = (N - N0)/2 for N of the right parity."""
        assert datum(1, "[1]", "+").rank(5) == 2
        with pytest.raises(PartitionError):
            datum(1, "[1]", "+").rank(4)

    def test_text_form(self):
        """Test that format_series and parse_series are inverse."""
        d = datum(5, "[2,2,1]", "-+")
        assert format_series(d) == "N0=5 nu=[2,2,1] sigma=-+"
        assert parse_series(format_series(d)) == d
        assert parse_series("N0=0 nu=[]- sigma=") == datum(0, "[]-", "")

    def test_text_errors(self):
        """Test that missing fields are syntax errors, invalid data semantic ones."""
        with pytest.raises(LabelSyntaxError):
            parse_series("N0=1 nu=[1]")
        with pytest.raises(LabelSemanticError):
            parse_series("N0=3 nu=[3] sigma=+")

    @pytest.mark.parametrize("text,position", [
        ("N0=1 nu=[1x] sigma=+", 10),
        ("  N0=1 nu=[1x] sigma=+", 12),
        ("N0=1 nu=[01] sigma=+", 9),
    ])
    def test_syntax_error_position(self, text, position):
        """Test that errors inside a field point into the whole series text."""
        with pytest.raises(LabelSyntaxError) as excinfo:
            parse_series(text)
        assert excinfo.value.position == position
        assert excinfo.value.text == text

    @pytest.mark.parametrize("text", ["N0=\u00b9 nu=[1] sigma=+", "N0=01 nu=[1] sigma=+"])
    def test_non_ascii_rank(self, text):
        """Test that N0 accepts ASCII digits only."""
        with pytest.raises(LabelSyntaxError):
            parse_series(text)

    def test_malformed_json(self):
        """Test that a non-numeric N0 in JSON is a semantic error."""
        with pytest.raises(LabelSemanticError):
            series_from_json({"N0": "x", "nu": {"lambda": [1], "split": None}, "sigma": [1]})

    def test_json(self):
        """Test that JSON form round trips."""
        d = datum(2, "[2]+", "-")
        assert series_to_json(d) == {"N0": 2, "nu": {"lambda": [2], "split": "+"}, "sigma": [-1]}
        assert series_from_json(series_to_json(d)) == d


class TestGamma:
    """Tests for the series map gamma."""

    def test_examples(self, partition):
        """Test rows nu + 2 mu with + on every new row."""
        assert str(gamma(datum(1, "[1]", "+"), partition(2), 5)) == "[5];+"
        assert str(gamma(datum(3, "[1,1,1]", "+"), partition(1), 5)) == "[3,1,1];++"
        assert str(gamma(datum(2, "[1,1]", "+"), partition(1, 1), 6)) == "[3,3];+"

    def test_split_tag_inherited(self, partition):
        """Test that even results keep the split tag of nu."""
        assert str(gamma(datum(2, "[2]-", "-"), partition(1), 4)) == "[4]-;-"
        assert str(gamma(datum(0, "[]+", ""), partition(1, 1), 4)) == "[2,2]+;+"

    def test_wrong_size(self, partition):
        """Test that mu must be a partition of a."""
        with pytest.raises(GammaError):
            gamma(datum(1, "[1]", "+"), partition(1), 5)


class TestCuspidalSupport:
    """Tests for the inverse of gamma."""

    def test_example(self, label, partition):
        """Test stripping two boxes from the first row of [4,2,1];--+."""
        support = cuspidal_support(label("[4,2,1];--+"))
        assert support.datum == datum(5, "[2,2,1]", "-+")
        assert support.mu == partition(1)

    def test_cuspidal_is_fixed(self, label):
        """Test that a cuspidal pair is its own support with mu empty."""
        support = cuspidal_support(label("[3,1];+-"))
        assert str(support.datum) == "N0=4 nu=[3,1] sigma=+-"
        assert support.mu.size == 0

    @pytest.mark.parametrize("N", range(0, 10))
    def test_order_independent(self, N):
        """Test that every admissible stripping order gives the same support."""
        for pair in enumerate_pairs(N):
            assert all_cuspidal_supports(pair) == {cuspidal_support(pair)}

    @pytest.mark.parametrize("N", range(0, 13))
    def test_inverse_of_gamma(self, N):
        """Test that gamma(cuspidal_support(pair)) == pair."""
        for pair in enumerate_pairs(N):
            support = cuspidal_support(pair)
            assert gamma(support.datum, support.mu, N) == pair

    def test_series_partition(self):
        """Test that the fibers over C_5 cover Psi_5 once."""
        fibers = series_partition(5)
        assert set(fibers) == set(enumerate_series(5))
        assert sum(len(members) for members in fibers.values()) == 12
        assert [str(p) for p in fibers[datum(1, "[1]", "+")]] == ["[5];+", "[3,2];++"]
