"""
Orbit catalog for the symmetric space GL_N/O_N.

H = SO_N acts on the unipotent (equivalently nilpotent self-adjoint) part of
G^{iota theta}. Orbits are labeled by partitions of N, with an extra +/- tag
when N is even and the partition is even. Equivariant simple local systems on
an orbit are labeled by sign vectors, one sign per distinct part value.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple

from springer_gln.core.exceptions import LabelSemanticError, PartitionError
from springer_gln.core.partitions import (
    Partition,
    blocks,
    dominance_leq,
    enumerate_partitions,
    format_partition,
    is_even,
    n_invariant,
)

# Configure logging
logger = logging.getLogger(__name__)

PLUS = 1
MINUS = -1

# One sign per block of the partition, largest part first.
SignVector = Tuple[int, ...]


class Split(Enum):
    """Which of the two H-orbits inside a split G^theta-orbit."""

    PLUS = "+"
    MINUS = "-"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GroupContext:
    """Numerical data of H = SO_N."""

    N: int

    def __post_init__(self):
        if self.N < 0:
            raise PartitionError(f"N must be nonnegative, got {self.N}")

    @property
    def n(self):
        return self.N // 2

    @property
    def dim_H(self):
        return self.N * (self.N - 1) // 2

    @property
    def nu_H(self):
        """Number of positive roots of SO_N."""
        n = self.n
        return n * n if self.N % 2 else n * n - n


def requires_split(lam):
    """True iff the orbit of type lam splits into two H-orbits."""
    return lam.size % 2 == 0 and is_even(lam)


@dataclass(frozen=True)
class OrbitLabel:
    """An H-orbit in the unipotent variety: a partition plus an optional split tag."""

    lam: Partition
    split: Optional[Split] = None

    def __post_init__(self):
        if requires_split(self.lam) and self.split is None:
            raise LabelSemanticError(
                f"orbit {format_partition(self.lam)} is split and needs a +/- tag"
            )
        if not requires_split(self.lam) and self.split is not None:
            raise LabelSemanticError(
                f"split tag not allowed on {format_partition(self.lam)} (N={self.lam.size})"
            )

    @property
    def N(self):
        return self.lam.size

    def __str__(self):
        return format_partition(self.lam) + (str(self.split) if self.split else "")


@lru_cache(maxsize=None)
def forced_block(lam):
    """Index of the block holding the largest odd part, or None when all parts are even."""
    for index, block in enumerate(blocks(lam)):
        if block.value % 2:
            return index
    return None


def check_sign_vector(lam, tau):
    """Validate a sign vector against lam.

    Raises:
        LabelSemanticError: On a wrong sign count, an entry other than +1/-1,
            or a minus sign at the largest odd part
    """
    block_form = blocks(lam)
    if len(tau) != len(block_form):
        raise LabelSemanticError(
            f"{format_partition(lam)} has {len(block_form)} distinct parts but {len(tau)} signs were given"
        )
    if any(sign not in (PLUS, MINUS) for sign in tau):
        raise LabelSemanticError(f"signs must be +1 or -1, got {tau}")
    forced = forced_block(lam)
    if forced is not None and tau[forced] != PLUS:
        raise LabelSemanticError(
            f"sign at the largest odd part {block_form[forced].value} of {format_partition(lam)} must be +"
        )


@dataclass(frozen=True)
class PairLabel:
    """A pair (orbit, local system): an element of Psi_N."""

    orbit: OrbitLabel
    tau: SignVector

    def __post_init__(self):
        object.__setattr__(self, 'tau', tuple(self.tau))
        check_sign_vector(self.orbit.lam, self.tau)

    @property
    def lam(self):
        return self.orbit.lam

    @property
    def split(self):
        return self.orbit.split

    @property
    def N(self):
        return self.orbit.lam.size

    def row_signs(self):
        """Expand the block signs to one sign per row."""
        return tuple(
            sign
            for block, sign in zip(blocks(self.lam), self.tau)
            for _ in range(block.multiplicity)
        )

    def __str__(self):
        return str(self.orbit) + ";" + format_signs(self.tau)


def format_signs(tau):
    return "".join("+" if sign == PLUS else "-" for sign in tau)


class ComponentGroups(NamedTuple):
    """Orders of the component groups of the centralizers of x of type lam."""

    h: int
    order_A_Gtheta: int
    order_A_H: int


def orbit_dimension(ctx, lam):
    """Return dim O_lambda = dim H - n(lambda)."""
    if lam.size != ctx.N:
        raise PartitionError(f"{format_partition(lam)} is not a partition of {ctx.N}")
    return ctx.dim_H - n_invariant(lam)


@lru_cache(maxsize=None)
def enumerate_orbits(N):
    """Return one OrbitLabel per H-orbit, partitions in reverse lexicographic order.

    Args:
        N: Nonnegative integer

    Returns:
        tuple: OrbitLabel objects; split partitions contribute their + orbit first
    """
    orbits = []
    for lam in enumerate_partitions(N):
        if requires_split(lam):
            orbits.append(OrbitLabel(lam, Split.PLUS))
            orbits.append(OrbitLabel(lam, Split.MINUS))
        else:
            orbits.append(OrbitLabel(lam))
    logger.debug(f"N={N}: {len(orbits)} orbits")
    return tuple(orbits)


def component_groups(lam):
    """Return (h, |A_Gtheta(x)|, |A_H(x)|) for x of type lam."""
    if not lam:
        raise PartitionError("component groups are not defined for the empty partition")
    h = len(blocks(lam))
    order_A_H = 2 ** h if is_even(lam) else 2 ** (h - 1)
    return ComponentGroups(h, 2 ** h, order_A_H)


@lru_cache(maxsize=None)
def valid_sign_vectors(lam):
    """Return all sign vectors over lam, '+' before '-' block by block.

    The empty partition has exactly one (empty) sign vector.
    """
    forced = forced_block(lam)
    choices = [
        (PLUS,) if index == forced else (PLUS, MINUS)
        for index in range(len(blocks(lam)))
    ]
    return tuple(itertools.product(*choices))


@lru_cache(maxsize=None)
def enumerate_pairs(N):
    """Return Psi_N: every (orbit, sign vector) pair, orbit-major."""
    pairs = tuple(
        PairLabel(orbit, tau)
        for orbit in enumerate_orbits(N)
        for tau in valid_sign_vectors(orbit.lam)
    )
    logger.debug(f"N={N}: {len(pairs)} pairs")
    return pairs


def regular_orbits(N):
    """The H-orbits of type (N): one for N odd, two for N even."""
    return tuple(o for o in enumerate_orbits(N) if o.lam == Partition((N,))) if N else ()


def subregular_partition(N):
    """The partition (N-1, 1), or (1) for N = 1."""
    if N < 1:
        raise PartitionError(f"no subregular partition for N={N}")
    return Partition((N - 1, 1)) if N > 1 else Partition((1,))


def closure_contains(big, small):
    """Decide whether ``small`` lies in the closure of ``big`` where this is known.

    Returns:
        True or False when decided, None when the relation between split
        orbits is not determined by dominance and the regular-orbit case.
    """
    if big.N != small.N:
        raise PartitionError(f"orbits of different sizes {big.N} and {small.N}")
    if big == small:
        return True
    if big.lam == small.lam:
        return False
    if not dominance_leq(small.lam, big.lam):
        return False
    if big.split is None:
        return True
    if big.lam == Partition((big.N,)):
        return dominance_leq(small.lam, subregular_partition(big.N))
    return None
