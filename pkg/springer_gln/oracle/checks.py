"""
Exhaustive matrix-level checks over all H-orbits with N <= max_n.

For each orbit label the representative is checked for self-adjointness,
Jordan type and centralizer dimensions (n(lambda), n(lambda) + N), the
orbit dimension is compared with dim H - dim of the centralizer in g^+,
and a normal basis is computed both for the representative and for an
H-conjugate of it. For even N the two regular orbits are compared.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import List

from tqdm import tqdm

from springer_gln.core.partitions import blocks, n_invariant
from springer_gln.oracle.forms import exact_det, form_matrix, is_self_adjoint, t_matrix
from springer_gln.oracle.normal_form import (
    gram_failures,
    normal_basis,
    normalized_gram_failures,
    quadratic_form_gram,
)
from springer_gln.oracle.representatives import (
    h_conjugate,
    jordan_type,
    nilpotent_representative,
    random_h_element,
    centralizer_dims,
)
from springer_gln.orbits.catalog import GroupContext, Split, enumerate_orbits, orbit_dimension, regular_orbits

# Configure logging
logger = logging.getLogger(__name__)

# Largest N for the non-degeneracy check of the quadratic forms on chain generators
QUADRATIC_FORM_MAX_N = 6


@dataclass
class OrbitCheck:
    """Outcome of every matrix check for one orbit label."""

    N: int
    orbit: str
    partition: str
    self_adjoint: bool
    jordan_type: str
    centralizer: tuple
    expected_centralizer: tuple
    orbit_stabilizer: bool
    normal_basis_failures: List[str] = field(default_factory=list)
    conjugate_failures: List[str] = field(default_factory=list)
    quadratic_forms_nondegenerate: bool = True

    @property
    def ok(self):
        return (
            self.self_adjoint
            and self.jordan_type == self.partition
            and self.centralizer == self.expected_centralizer
            and self.orbit_stabilizer
            and not self.normal_basis_failures
            and not self.conjugate_failures
            and self.quadratic_forms_nondegenerate
        )

    def to_dict(self):
        return {
            "N": self.N,
            "orbit": self.orbit,
            "ok": self.ok,
            "self_adjoint": self.self_adjoint,
            "jordan_type": self.jordan_type,
            "centralizer": list(self.centralizer),
            "expected_centralizer": list(self.expected_centralizer),
            "orbit_stabilizer": self.orbit_stabilizer,
            "normal_basis_failures": self.normal_basis_failures,
            "conjugate_failures": self.conjugate_failures,
            "quadratic_forms_nondegenerate": self.quadratic_forms_nondegenerate,
        }


@dataclass
class RegularSplitCheck:
    """The two regular orbits (N)^+ and (N)^- for even N."""

    N: int
    t_conjugate: bool
    t_determinant: int
    trials: int
    collisions: int

    @property
    def ok(self):
        return self.t_conjugate and self.t_determinant == -1 and self.collisions == 0

    def to_dict(self):
        return {
            "N": self.N,
            "ok": self.ok,
            "t_conjugate": self.t_conjugate,
            "t_determinant": self.t_determinant,
            "trials": self.trials,
            "collisions": self.collisions,
        }


@dataclass
class OracleReport:
    max_n: int
    seed: int
    trials: int
    orbits: List[OrbitCheck] = field(default_factory=list)
    regular_splits: List[RegularSplitCheck] = field(default_factory=list)

    @property
    def ok(self):
        return all(check.ok for check in self.orbits) and all(check.ok for check in self.regular_splits)

    def failures(self):
        return [check.to_dict() for check in self.orbits + self.regular_splits if not check.ok]

    def to_dict(self):
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "checked_orbits": len(self.orbits),
            "orbits": [check.to_dict() for check in self.orbits],
            "regular_splits": [check.to_dict() for check in self.regular_splits],
        }


def check_orbit(orbit, seed):
    """Run every per-orbit matrix check on the representative of ``orbit``."""
    N, lam = orbit.N, orbit.lam
    ctx = form_matrix(N)
    x = nilpotent_representative(N, lam, orbit.split)
    dims = centralizer_dims(x, ctx)
    expected = (n_invariant(lam), n_invariant(lam) + N)
    stabilizer_ok = dims[0] + orbit_dimension(GroupContext(N), lam) == GroupContext(N).dim_H

    basis = normal_basis(x, ctx)
    failures = gram_failures(x, ctx, basis) + normalized_gram_failures(ctx, basis)
    if basis.partition() != lam:
        failures.append(f"normal basis has chain lengths {basis.partition()}")

    g = random_h_element(N, seed)
    y = h_conjugate(g, x, ctx)
    conjugate_basis = normal_basis(y, ctx)
    conjugate_failures = gram_failures(y, ctx, conjugate_basis) + normalized_gram_failures(ctx, conjugate_basis)
    if jordan_type(y) != lam or conjugate_basis.partition() != lam:
        conjugate_failures.append(f"conjugate has Jordan type {jordan_type(y)}")

    nondegenerate = True
    if N <= QUADRATIC_FORM_MAX_N:
        nondegenerate = all(
            exact_det(quadratic_form_gram(x, ctx, basis, index)) != 0
            for index in range(1, len(blocks(lam)) + 1)
        )

    check = OrbitCheck(
        N=N,
        orbit=str(orbit),
        partition=str(lam),
        self_adjoint=is_self_adjoint(x, ctx),
        jordan_type=str(jordan_type(x)),
        centralizer=dims,
        expected_centralizer=expected,
        orbit_stabilizer=stabilizer_ok,
        normal_basis_failures=failures,
        conjugate_failures=conjugate_failures,
        quadratic_forms_nondegenerate=nondegenerate,
    )
    if not check.ok:
        logger.error(f"Matrix checks failed for {orbit}: {check.to_dict()}")
    return check


def check_regular_split(N, seed, trials):
    """Compare (N)^+ and (N)^-: t_n conjugates one to the other, random H-elements never do."""
    ctx = form_matrix(N)
    plus_orbit, minus_orbit = regular_orbits(N)
    plus = nilpotent_representative(N, plus_orbit.lam, Split.PLUS)
    minus = nilpotent_representative(N, minus_orbit.lam, Split.MINUS)
    t = t_matrix(ctx)
    rng = random.Random(seed)
    collisions = 0
    for _ in range(trials):
        g = random_h_element(N, rng.randrange(2 ** 32))
        if h_conjugate(g, plus, ctx) == minus:
            collisions += 1
    check = RegularSplitCheck(N, t * plus * t == minus, int(exact_det(t)), trials, collisions)
    if not check.ok:
        logger.error(f"Regular split check failed for N={N}: {check.to_dict()}")
    return check


def run_oracle_checks(max_n, seed=0, trials=500, progress=False):
    """Run the matrix oracle over every orbit with 1 <= N <= max_n.

    Args:
        max_n: Largest N
        seed: Seed for the random H-elements
        trials: Random H-elements per even N in the regular split check
        progress: Show a progress bar on stderr

    Returns:
        OracleReport: All per-orbit and regular-split checks
    """
    rng = random.Random(seed)
    report = OracleReport(max_n, seed, trials)
    work = [orbit for N in range(1, max_n + 1) for orbit in enumerate_orbits(N)]
    for orbit in tqdm(work, desc="oracle", disable=not progress):
        report.orbits.append(check_orbit(orbit, rng.randrange(2 ** 32)))
    for N in range(2, max_n + 1, 2):
        report.regular_splits.append(check_regular_split(N, rng.randrange(2 ** 32), trials))
    logger.info(
        f"Oracle checks up to N={max_n}: {len(report.orbits)} orbits, "
        f"{len(report.failures())} failures"
    )
    return report
