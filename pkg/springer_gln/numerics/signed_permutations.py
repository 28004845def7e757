"""
Signed permutations and the counts b_w and Delta_Q.

A signed permutation of n letters sends i to images[i-1] in {+-1, ..., +-n}
so that i -> |images[i-1]| is a permutation. The Weyl group of SO_{2n+1} is
the full group; for SO_{2n} it is the index-2 subgroup with an even number of
sign changes.
"""

import logging
import random
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from springer_gln.core.exceptions import SpringerError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation given by its images of 1..n."""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, 'images', images)
        if sorted(abs(i) for i in images) != list(range(1, len(images) + 1)):
            raise SpringerError(f"{images} is not a signed permutation")

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def inverse_image(self, i):
        """Return w^{-1}(i): j when w(j) = i, -j when w(j) = -i."""
        for j, image in enumerate(self.images, start=1):
            if image == i:
                return j
            if image == -i:
                return -j
        raise SpringerError(f"{i} is not a letter of {self}")

    def sign_changes(self):
        return sum(1 for image in self.images if image < 0)

    def __str__(self):
        return "[" + " ".join(str(i) for i in self.images) + "]"


def identity(n):
    return SignedPermutation(tuple(range(1, n + 1)))


def negation(n):
    return SignedPermutation(tuple(-i for i in range(1, n + 1)))


def random_signed_permutation(n, rng, even_signs=False):
    """Draw a uniform signed permutation.

    Args:
        n: Number of letters
        rng: A ``random.Random`` instance supplied by the caller
        even_signs: Draw from the subgroup with an even number of sign changes
    """
    letters = list(range(1, n + 1))
    rng.shuffle(letters)
    images = [letter if rng.random() < 0.5 else -letter for letter in letters]
    if even_signs and sum(1 for i in images if i < 0) % 2:
        images[-1] = -images[-1]
    return SignedPermutation(tuple(images))


def _positive_preimages_in_head(w, letters, k):
    count = 0
    for i in letters:
        j = w.inverse_image(i)
        if 1 <= j <= k:
            count += 1
    return count


def b_w(w, n, n0):
    """Number of i <= n - n0 with 1 <= w^{-1}(i) <= n - n0."""
    k = n - n0
    return _positive_preimages_in_head(w, range(1, k + 1), k)


def delta_Q_w(w, n, n0):
    """Number of i > n - n0 with 1 <= w^{-1}(i) <= n - n0."""
    k = n - n0
    return _positive_preimages_in_head(w, range(k + 1, n + 1), k)


class BoundReport(NamedTuple):
    """Result of checking Delta_Q <= Delta_P - b_w on random samples."""

    samples: int
    violations: list
    equalities: int
    even_signs: bool
    boundary_cases: int = 0

    @property
    def ok(self):
        return not self.violations


def _boundary_permutations(n, even_signs):
    yield identity(n)
    if not even_signs or n % 2 == 0:
        yield negation(n)


def _slack(w, n, n0):
    return (n - n0) - b_w(w, n, n0) - delta_Q_w(w, n, n0)


def bound_sweep(samples, max_n, seed, even_signs=False):
    """Check Delta_Q(w) <= Delta_P - b_w on seeded random signed permutations.

    Each sample draws n in 1..max_n, n0 in 0..n and w. The identity and the
    full sign change (when it lies in the group) are checked for every n and
    n0 first; they are counted in ``boundary_cases``, not in ``samples``.

    Returns:
        BoundReport: Violations found and the number of equality cases
    """
    rng = random.Random(seed)
    violations = []
    equalities = 0
    boundary = [
        (w, n, n0)
        for n in range(1, max_n + 1)
        for n0 in range(n + 1)
        for w in _boundary_permutations(n, even_signs)
    ]
    drawn = []
    for _ in range(samples):
        n = rng.randint(1, max_n)
        n0 = rng.randint(0, n)
        drawn.append((random_signed_permutation(n, rng, even_signs=even_signs), n, n0))
    for w, n, n0 in boundary + drawn:
        slack = _slack(w, n, n0)
        if slack < 0:
            violations.append(f"w={w} n={n} n0={n0}")
        elif slack == 0:
            equalities += 1
    logger.info(
        f"Delta_Q bound: {samples} samples and {len(boundary)} boundary cases, "
        f"{len(violations)} violations, {equalities} equalities"
    )
    return BoundReport(samples, violations, equalities, even_signs, len(boundary))
