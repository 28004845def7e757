"""
Normal bases for self-adjoint nilpotent matrices.

A normal basis of x is a family v_{i,j} (i a Jordan chain, 0 <= j < L_i)
with x v_{i,j} = v_{i,j-1}, x v_{i,0} = 0 and

    <v_{i,j}, v_{i',j'}> = 1 if i = i' and j + j' = L_i - 1, else 0.

Over the rationals each chain is found up to a scalar c_i = <u, x^{L_i-1} u>
for its generator u; dividing by sqrt(c_i) yields the basis above. Every
check here works with the rational chains and the recorded scales.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from sympy import Matrix, Rational, binomial, expand, sqrt

from springer_gln.core.exceptions import NotNilpotentError, PartitionError, VerificationError
from springer_gln.core.partitions import Partition, blocks

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalChain:
    """One Jordan chain: ``vectors[j]`` is x^{L-1-j} applied to the generator."""

    length: int
    scale: Rational
    vectors: Tuple[Matrix, ...]

    @property
    def generator(self):
        return self.vectors[-1]


@dataclass(frozen=True)
class NormalBasis:
    chains: Tuple[NormalChain, ...]

    def partition(self):
        return Partition(tuple(chain.length for chain in self.chains))

    def matrix(self):
        """Rational basis matrix, columns v_{1,0}, ..., v_{1,L_1-1}, v_{2,0}, ..."""
        return Matrix.hstack(*(v for chain in self.chains for v in chain.vectors))

    def normalized_matrix(self):
        """Basis matrix with every chain divided by sqrt of its scale."""
        return Matrix.hstack(*(v / sqrt(chain.scale) for chain in self.chains for v in chain.vectors))


def _apply_powers(x, v, count):
    powers = [v]
    for _ in range(count - 1):
        powers.append(x * powers[-1])
    return powers


def _nilpotency_index(x, vectors):
    index = 0
    for v in vectors:
        steps = 0
        while any(v):
            v = x * v
            steps += 1
            if steps > x.rows:
                raise NotNilpotentError(f"matrix is not nilpotent on a vector after {steps} steps")
        index = max(index, steps)
    return index


def _find_generator(x, ctx, vectors, length):
    """Return v in the span with <v, x^{length-1} v> != 0.

    The pairing (v, w) -> <v, x^{length-1} w> is symmetric and nonzero on the
    span, so a basis vector or a sum of two basis vectors always works.
    """
    top = x ** (length - 1)
    for v in vectors:
        if ctx.pairing(v, top * v) != 0:
            return v
    for a, v in enumerate(vectors):
        for w in vectors[a + 1:]:
            if ctx.pairing(v, top * w) != 0:
                return v + w
    raise VerificationError(f"no generator of a chain of length {length} found")


def _series_inverse_sqrt(coefficients, length):
    """(1 + u)^{-1/2} truncated below t^length, u given with zero constant term."""
    result = [Rational(0)] * length
    power = [Rational(1)] + [Rational(0)] * (length - 1)
    for r in range(length):
        weight = binomial(Rational(-1, 2), r)
        for k in range(length):
            result[k] += weight * power[k]
        power = [
            sum(power[i] * coefficients[k - i] for i in range(k + 1))
            for k in range(length)
        ]
    return result


def _normalize_generator(x, ctx, v, length):
    """Replace v by g(x) v so that <v, x^m v> = 0 for every m < length - 1."""
    pairings = [ctx.pairing(v, w) for w in _apply_powers(x, v, length)]
    scale = pairings[length - 1]
    # reversed pairings over the leading one, minus the constant term
    u = [Rational(0)] + [pairings[length - 1 - j] / scale for j in range(1, length)]
    g = _series_inverse_sqrt(u, length)
    fixed = Matrix.zeros(x.rows, 1)
    for coefficient, w in zip(g, _apply_powers(x, v, length)):
        fixed += coefficient * w
    return fixed, scale


def _independent(vectors):
    if not vectors:
        return []
    return Matrix.hstack(*vectors).columnspace()


def normal_basis(x, ctx):
    """Split V into mutually orthogonal Jordan chains of x.

    Args:
        x: Self-adjoint nilpotent matrix
        ctx: FormContext of the same size

    Returns:
        NormalBasis: Chains in weakly decreasing length order
    """
    remaining = [ctx.basis_vector(i) for i in range(ctx.N)]
    chains = []
    while remaining:
        length = _nilpotency_index(x, remaining)
        v = _find_generator(x, ctx, remaining, length)
        generator, scale = _normalize_generator(x, ctx, v, length)
        vectors = tuple(reversed(_apply_powers(x, generator, length)))
        chains.append(NormalChain(length, scale, vectors))
        projected = []
        for w in remaining:
            for j, u in enumerate(vectors):
                w = w - (ctx.pairing(w, vectors[length - 1 - j]) / scale) * u
            projected.append(w)
        remaining = _independent(projected)
        logger.debug(f"Split off a chain of length {length} with scale {scale}; {len(remaining)} dimensions left")
    return NormalBasis(tuple(chains))


def gram_failures(x, ctx, basis):
    """Compare a NormalBasis with the normal-basis conditions, exactly.

    Returns:
        list: Human-readable failures, empty on success
    """
    failures = []
    if basis.partition().size != ctx.N:
        return [f"chains cover {basis.partition().size} of {ctx.N} dimensions"]
    for i, chain in enumerate(basis.chains):
        if any(x * chain.vectors[0]):
            failures.append(f"chain {i}: x does not kill v_0")
        for j in range(1, chain.length):
            if x * chain.vectors[j] != chain.vectors[j - 1]:
                failures.append(f"chain {i}: x v_{j} != v_{j - 1}")
    for i, first in enumerate(basis.chains):
        for k, second in enumerate(basis.chains):
            for j, v in enumerate(first.vectors):
                for jj, w in enumerate(second.vectors):
                    expected = first.scale if i == k and j + jj == first.length - 1 else 0
                    if ctx.pairing(v, w) != expected:
                        failures.append(f"<v_({i},{j}), v_({k},{jj})> = {ctx.pairing(v, w)}, expected {expected}")
    return failures


def quadratic_form_gram(x, ctx, basis, block_index):
    """Gram matrix of Q(v) = <v, x^{a-1} v> on the generators of the chains of length a.

    Args:
        x: Self-adjoint nilpotent matrix
        ctx: FormContext
        basis: NormalBasis of x
        block_index: 1-based index of the distinct chain length a

    Returns:
        Matrix: Square rational Gram matrix, one row per chain of length a
    """
    block_form = blocks(basis.partition())
    if not 1 <= block_index <= len(block_form):
        raise PartitionError(f"block index {block_index} out of range 1..{len(block_form)}")
    value = block_form[block_index - 1].value
    top = x ** (value - 1)
    generators = [chain.generator for chain in basis.chains if chain.length == value]
    return Matrix(len(generators), len(generators), lambda p, q: ctx.pairing(generators[p], top * generators[q]))


def normal_pattern(basis):
    """Gram matrix a normal basis must have: 1 at (v_{i,j}, v_{i,L_i-1-j}), 0 elsewhere."""
    size = basis.partition().size
    pattern = Matrix.zeros(size, size)
    offset = 0
    for chain in basis.chains:
        for j in range(chain.length):
            pattern[offset + j, offset + chain.length - 1 - j] = 1
        offset += chain.length
    return pattern


def normalized_gram_failures(ctx, basis):
    """Compare the Gram matrix of ``basis.normalized_matrix()`` with :func:`normal_pattern`.

    Entries involve square roots of the chain scales and are expanded
    before comparison, so the check is exact.

    Returns:
        list: One message per differing entry, empty on success
    """
    columns = basis.normalized_matrix()
    gram = (columns.T * ctx.J * columns).applyfunc(expand)
    pattern = normal_pattern(basis)
    failures = [
        f"normalized <v_{p}, v_{q}> = {gram[p, q]}, expected {pattern[p, q]}"
        for p in range(gram.rows)
        for q in range(gram.cols)
        if gram[p, q] != pattern[p, q]
    ]
    if failures:
        logger.error(f"Normalized basis misses the normal form in {len(failures)} entries")
    return failures
