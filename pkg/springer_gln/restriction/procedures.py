"""
Restriction to the maximal Levi GL_1 x SO_{N-2}.

A Jordan type lambda' of N-2 is reachable from lambda by one of the moves

* (A_i): one row of length a_i becomes a row of length a_i - 2; this is
  (A'_i) when a_{i+1} <= a_i - 2 and (A''_i) when a_{i+1} = a_i - 1,
* (B_i): two rows of length a_i become two rows of length a_i - 1.

Only (A'_i) moves contribute to the restriction multiplicities.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from springer_gln.core.exceptions import PartitionError, ProcedureError
from springer_gln.core.partitions import Block, blocks, format_partition, from_blocks, n_invariant
from springer_gln.orbits.catalog import PLUS, enumerate_pairs

# Configure logging
logger = logging.getLogger(__name__)


class ProcedureKind(Enum):
    A_PRIME = "A'"
    A_DOUBLEPRIME = "A''"
    B = "B"


@dataclass(frozen=True)
class Procedure:
    """A diagram move at a block of lambda (1-based block index)."""

    kind: ProcedureKind
    block_index: int

    def __str__(self):
        return f"{self.kind.value}_{self.block_index}"


class YDimension(NamedTuple):
    dim_Y: int
    s: Fraction
    full: bool


def available_moves(lam):
    """Every move that applies to lam, in block order."""
    block_form = blocks(lam)
    moves = []
    for index, (value, multiplicity) in enumerate(block_form):
        next_value = block_form[index + 1].value if index + 1 < len(block_form) else 0
        if value >= 2:
            kind = ProcedureKind.A_PRIME if next_value <= value - 2 else ProcedureKind.A_DOUBLEPRIME
            moves.append(Procedure(kind, index + 1))
        if multiplicity >= 2:
            moves.append(Procedure(ProcedureKind.B, index + 1))
    return tuple(moves)


def apply_procedure(lam, proc):
    """Return the partition of size(lam) - 2 that proc produces from lam.

    Raises:
        ProcedureError: If proc does not apply to lam
    """
    if proc not in available_moves(lam):
        raise ProcedureError(f"{proc} does not apply to {format_partition(lam)}")
    rows = Counter({block.value: block.multiplicity for block in blocks(lam)})
    value = blocks(lam)[proc.block_index - 1].value
    if proc.kind is ProcedureKind.B:
        rows[value] -= 2
        rows[value - 1] += 2
    else:
        rows[value] -= 1
        rows[value - 2] += 1
    return from_blocks(Block(v, m) for v, m in sorted(rows.items(), reverse=True) if v > 0 and m > 0)


@lru_cache(maxsize=None)
def procedures(lam, lam_p):
    """Return every move turning lam into lam_p.

    Raises:
        PartitionError: If size(lam_p) != size(lam) - 2
    """
    if lam_p.size != lam.size - 2:
        raise PartitionError(
            f"{format_partition(lam_p)} is not two boxes smaller than {format_partition(lam)}"
        )
    return tuple(proc for proc in available_moves(lam) if apply_procedure(lam, proc) == lam_p)


def y_dimension(lam, lam_p, proc):
    """Return dim Y_{u,v}, the bound s and whether dim Y = s.

    dim Y is m_1 + ... + m_i - 1 for (A_i) and m_1 + ... + m_i - 2 for (B_i);
    s = (n(lam) - n(lam') - 1)/2 + 1/2.

    Raises:
        ProcedureError: If proc does not turn lam into lam_p
    """
    if proc not in procedures(lam, lam_p):
        raise ProcedureError(f"{proc} does not turn {format_partition(lam)} into {format_partition(lam_p)}")
    rows_through_block = sum(b.multiplicity for b in blocks(lam)[:proc.block_index])
    dim_Y = rows_through_block - (2 if proc.kind is ProcedureKind.B else 1)
    s = Fraction(n_invariant(lam) - (n_invariant(lam_p) + 1), 2) + Fraction(1, 2)
    full = dim_Y == s
    if full != (proc.kind is ProcedureKind.A_PRIME):
        logger.error(f"dim Y = {dim_Y}, s = {s} for {proc} on {format_partition(lam)}")
    return YDimension(dim_Y, s, full)


def _sign_at(lam, tau, value):
    if value == 0:
        return PLUS
    for block, sign in zip(blocks(lam), tau):
        if block.value == value:
            return sign
    return None


def restriction_case(lam, block_index):
    """'I' when the shortened row joins the next block, 'II' when it forms a new one."""
    block_form = blocks(lam)
    value = block_form[block_index - 1].value
    next_value = block_form[block_index].value if block_index < len(block_form) else 0
    return "I" if next_value == value - 2 else "II"


def d_member(tau, tau_p, block_index, lam, lam_p):
    """Membership of (tau, tau') in the pairing set D for an (A'_i) move.

    Signs of unchanged blocks must agree; the sign of block i must equal the
    sign of lambda' at value a_i - 2 (the sign + when that value is 0). The
    sign of lambda' at a_i, when block i keeps rows, is free.

    Raises:
        ProcedureError: If lam_p is not obtained from lam by (A'_i)
    """
    if Procedure(ProcedureKind.A_PRIME, block_index) not in procedures(lam, lam_p):
        raise ProcedureError(
            f"{format_partition(lam_p)} is not obtained from {format_partition(lam)} by A'_{block_index}"
        )
    block_form = blocks(lam)
    for index, (block, sign) in enumerate(zip(block_form, tau)):
        if index == block_index - 1:
            continue
        if _sign_at(lam_p, tau_p, block.value) != sign:
            return False
    moved_value = block_form[block_index - 1].value - 2
    return tau[block_index - 1] == _sign_at(lam_p, tau_p, moved_value)


def split_compatible(pair, pair_p):
    """Split tags must agree when both orbits carry one."""
    if pair.split is None or pair_p.split is None:
        return True
    return pair.split == pair_p.split


def epsilon_multiplicity(pair, pair_p):
    """Multiplicity (0 or 1) of tau x tau' in the component representation for (pair, pair')."""
    if pair_p.N != pair.N - 2:
        return 0
    for proc in procedures(pair.lam, pair_p.lam):
        if proc.kind is not ProcedureKind.A_PRIME:
            continue
        if split_compatible(pair, pair_p) and d_member(
            pair.tau, pair_p.tau, proc.block_index, pair.lam, pair_p.lam
        ):
            return 1
    return 0


def restriction_targets(pair):
    """All pairs of Psi_{N-2} met with multiplicity 1 by restriction of pair."""
    if pair.N < 2:
        return ()
    return tuple(p for p in enumerate_pairs(pair.N - 2) if epsilon_multiplicity(pair, p))


def springer_fiber_half_dimensional(lam):
    """True iff lambda_i is even for every i >= 2."""
    return all(part % 2 == 0 for part in lam.parts[1:])


@lru_cache(maxsize=None)
def springer_fiber_half_dimensional_by_induction(lam):
    """Same criterion computed through (A') moves down to size at most 1."""
    if lam.size <= 1:
        return True
    return any(
        springer_fiber_half_dimensional_by_induction(apply_procedure(lam, proc))
        for proc in available_moves(lam)
        if proc.kind is ProcedureKind.A_PRIME
    )
