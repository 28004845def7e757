"""Tests for diagram moves and restriction multiplicities."""

from fractions import Fraction

import pytest

from springer_gln.core.exceptions import PartitionError, ProcedureError
from springer_gln.core.partitions import enumerate_partitions
from springer_gln.restriction.procedures import (
    Procedure,
    ProcedureKind,
    apply_procedure,
    available_moves,
    d_member,
    epsilon_multiplicity,
    procedures,
    restriction_case,
    restriction_targets,
    split_compatible,
    springer_fiber_half_dimensional,
    springer_fiber_half_dimensional_by_induction,
    y_dimension,
)


class TestProcedures:
    """Tests for procedures and y_dimension."""

    def test_a_prime(self, partition):
        """Test that (5) -> (3) shortens the only row."""
        found = procedures(partition(5), partition(3))
        assert found == (Procedure(ProcedureKind.A_PRIME, 1),)
        assert y_dimension(partition(5), partition(3), found[0]) == (0, Fraction(0), True)

    def test_a_doubleprime(self, partition):
        """Test that (3,2) -> (2,1) shortens a row next to a row one shorter."""
        found = procedures(partition(3, 2), partition(2, 1))
        assert [str(p) for p in found] == ["A''_1"]
        dims = y_dimension(partition(3, 2), partition(2, 1), found[0])
        assert dims.dim_Y == 0
        assert dims.s == Fraction(1, 2)
        assert not dims.full

    def test_b(self, partition):
        """Test that (2,2) -> (1,1) shortens two equal rows by one."""
        found = procedures(partition(2, 2), partition(1, 1))
        assert [str(p) for p in found] == ["B_1"]
        assert y_dimension(partition(2, 2), partition(1, 1), found[0]).s == Fraction(1, 2)

    def test_unreachable(self, partition):
        """Test that some shapes two boxes smaller are not reachable."""
        assert procedures(partition(4), partition(1, 1)) == ()

    def test_size_mismatch(self, partition):
        """Test that the target must be two boxes smaller."""
        with pytest.raises(PartitionError):
            procedures(partition(4), partition(1))

    def test_wrong_procedure(self, partition):
        """Test that y_dimension refuses a move that does not apply."""
        with pytest.raises(ProcedureError):
            y_dimension(partition(5), partition(3), Procedure(ProcedureKind.B, 1))

    @pytest.mark.parametrize("N", range(2, 13))
    def test_full_exactly_for_a_prime(self, N):
        """Test that dim Y reaches s exactly for (A') moves."""
        for lam in enumerate_partitions(N):
            for lam_p in enumerate_partitions(N - 2):
                for proc in procedures(lam, lam_p):
                    assert y_dimension(lam, lam_p, proc).full == (proc.kind is ProcedureKind.A_PRIME)

    @pytest.mark.parametrize("N", range(2, 13))
    def test_at_most_one_procedure(self, N):
        """Test that no two moves produce the same smaller Jordan type."""
        for lam in enumerate_partitions(N):
            for lam_p in enumerate_partitions(N - 2):
                assert len(procedures(lam, lam_p)) <= 1

    def test_available_moves(self, partition):
        """Test the moves of (4,2,2,1) in block order."""
        moves = available_moves(partition(4, 2, 2, 1))
        assert [str(p) for p in moves] == ["A'_1", "A''_2", "B_2"]
        assert apply_procedure(partition(4, 2, 2, 1), moves[0]) == partition(2, 2, 2, 1)
        assert apply_procedure(partition(4, 2, 2, 1), moves[1]) == partition(4, 2, 1)
        assert apply_procedure(partition(4, 2, 2, 1), moves[2]) == partition(4, 1, 1, 1)

    def test_apply_drops_empty_rows(self, partition):
        """Test that a row shortened to zero disappears."""
        assert apply_procedure(partition(3, 2), Procedure(ProcedureKind.A_PRIME, 2)) == partition(3)
        with pytest.raises(ProcedureError):
            apply_procedure(partition(3, 1), Procedure(ProcedureKind.B, 1))

    def test_restriction_case(self, partition):
        """Test that case I joins the next block, case II creates a new one."""
        assert restriction_case(partition(4, 2, 1), 1) == "I"
        assert restriction_case(partition(5), 1) == "II"


class TestMultiplicities:
    """Tests for the pairing set and epsilon multiplicities."""

    def test_d_member(self, label):
        """Test that block 1 of [4,2,1] moves onto the rows of length 2."""
        pair = label("[4,2,1];--+")
        assert d_member(pair.tau, label("[2,2,1];-+").tau, 1, pair.lam, label("[2,2,1];-+").lam)
        assert not d_member(pair.tau, label("[2,2,1];++").tau, 1, pair.lam, label("[2,2,1];++").lam)

    def test_d_member_wrong_move(self, partition):
        """Test that d_member is only defined for (A') moves."""
        with pytest.raises(ProcedureError):
            d_member((1, 1), (1,), 1, partition(3, 2), partition(2, 1))

    def test_epsilon(self, label):
        """Test multiplicity one exactly on the pairing set."""
        assert epsilon_multiplicity(label("[4,2,1];--+"), label("[2,2,1];-+")) == 1
        assert epsilon_multiplicity(label("[4,2,1];--+"), label("[2,2,1];++")) == 0
        assert epsilon_multiplicity(label("[5];+"), label("[1];+")) == 0

    def test_targets(self, label):
        """Test that the regular orbit restricts to the regular orbit."""
        assert [str(p) for p in restriction_targets(label("[5];+"))] == ["[3];+"]
        assert restriction_targets(label("[1];+")) == ()

    def test_split_compatible(self, label):
        """Test that split tags must agree when both are present."""
        assert split_compatible(label("[4]+;+"), label("[2]+;+"))
        assert not split_compatible(label("[4]+;+"), label("[2]-;+"))
        assert split_compatible(label("[4]+;+"), label("[1,1];+"))


class TestSpringerFiber:
    """Tests for the half-dimensional Springer fibre criterion."""

    @pytest.mark.parametrize("parts,expected", [((5,), True), ((3, 2), True), ((3, 1), False), ((2, 1, 1), False), ((2, 2), True)])
    def test_examples(self, partition, parts, expected):
        """Test that lambda_i is even for every i >= 2."""
        assert springer_fiber_half_dimensional(partition(*parts)) is expected

    @pytest.mark.parametrize("N", range(0, 13))
    def test_both_forms_agree(self, N):
        """Test that the closed form matches the inductive one."""
        for lam in enumerate_partitions(N):
            assert springer_fiber_half_dimensional(lam) == springer_fiber_half_dimensional_by_induction(lam)
