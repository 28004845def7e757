"""
Closed-form dimension arithmetic.

Half-integers are returned as ``fractions.Fraction``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from springer_gln.core.exceptions import PartitionError
from springer_gln.core.partitions import n_invariant
from springer_gln.orbits.catalog import GroupContext, orbit_dimension

# Configure logging
logger = logging.getLogger(__name__)


def nu_H(N):
    """Number of positive roots of SO_N."""
    return GroupContext(N).nu_H


@dataclass(frozen=True)
class LeviShape:
    """The theta-stable Levi (GL_1)^a x GL_{N0} with N = N0 + 2a."""

    N: int
    N0: int

    def __post_init__(self):
        if self.N0 < 0 or self.N0 > self.N or (self.N - self.N0) % 2:
            raise PartitionError(f"invalid Levi shape N={self.N}, N0={self.N0}")

    @property
    def a(self):
        return (self.N - self.N0) // 2

    @property
    def nu_L(self):
        """nu of the Levi: the torus part contributes nothing."""
        return nu_H(self.N0)


def delta_P(shape):
    return shape.a


def dim_X_uni(shape, dim_O_L):
    """2 nu_H - 2 nu_L + dim O_L + Delta_P."""
    return 2 * nu_H(shape.N) - 2 * shape.nu_L + dim_O_L + delta_P(shape)


def dim_Y_stratum(shape, dim_O_L):
    """Dimension of the stratum Y: 2 nu_H - 2 nu_L + (a + dim O_L) + Delta_P."""
    return 2 * nu_H(shape.N) - 2 * shape.nu_L + (shape.a + dim_O_L) + delta_P(shape)


def d_O(shape, dim_O, dim_O_L):
    """(nu_H - dim O/2) - (nu_L - dim O_L/2) + Delta_P/2."""
    return (
        (nu_H(shape.N) - Fraction(dim_O, 2))
        - (shape.nu_L - Fraction(dim_O_L, 2))
        + Fraction(delta_P(shape), 2)
    )


class SAndDelta(NamedTuple):
    s: Fraction
    delta: Optional[Fraction]


def s_and_delta(dim_Z_H_u, dim_Z_L_v, delta_p, dim_O=None, dim_O_L=None):
    """Return s = (dim Z_H(u) - dim Z_L(v))/2 + Delta_P/2 and, given both orbit
    dimensions, delta = (dim O - dim O_L)/2 + Delta_P/2 (None otherwise)."""
    s = Fraction(dim_Z_H_u - dim_Z_L_v, 2) + Fraction(delta_p, 2)
    delta = None
    if dim_O is not None and dim_O_L is not None:
        delta = Fraction(dim_O - dim_O_L, 2) + Fraction(delta_p, 2)
    return SAndDelta(s, delta)


def d0(nu_H_value, nu_L, nu_Lp, dim_O_L, dim_O_Lp, delta_p, delta_pp):
    """2 nu_H - nu_L - nu_L' + (dim O_L + dim O_L')/2 + (Delta_P + Delta_P')/2."""
    return (
        2 * nu_H_value - nu_L - nu_Lp
        + Fraction(dim_O_L + dim_O_Lp, 2)
        + Fraction(delta_p + delta_pp, 2)
    )


class OpenOrbitCheck(NamedTuple):
    """Dimension data of the series' open orbit (the unit-representation orbit)."""

    dim_X_uni: int
    dim_open_orbit: int
    d_O: Fraction

    @property
    def ok(self):
        return self.dim_X_uni == self.dim_open_orbit and self.d_O == 0


def open_orbit_check(datum, N):
    """Compare dim X_uni with dim_H - n(nu) and evaluate d_O on the open orbit."""
    shape = LeviShape(N, datum.N0)
    dim_O_L = orbit_dimension(GroupContext(datum.N0), datum.nu.lam)
    dim_open = GroupContext(N).dim_H - n_invariant(datum.nu.lam)
    check = OpenOrbitCheck(dim_X_uni(shape, dim_O_L), dim_open, d_O(shape, dim_open, dim_O_L))
    if not check.ok:
        logger.error(f"Open orbit dimensions disagree for {datum} at N={N}: {check}")
    return check
