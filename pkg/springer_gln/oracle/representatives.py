"""
Self-adjoint nilpotent representatives, Jordan types and centralizers.
"""

import logging
import random

from sympy import Matrix, Rational

from springer_gln.core.exceptions import NotNilpotentError, PartitionError, VerificationError
from springer_gln.core.partitions import Partition, conjugate, format_partition
from springer_gln.oracle.forms import (
    exact_det,
    exact_inverse,
    exact_rank,
    form_matrix,
    is_self_adjoint,
    is_skew_adjoint,
    preserves_form,
    t_matrix,
)
from springer_gln.orbits.catalog import OrbitLabel, Split

# Configure logging
logger = logging.getLogger(__name__)


def _chain_images(ctx, lam):
    """Images in V of the chain vectors w_k = x^k u, one list per row of lam.

    Every chain gets a Gram pattern <w_k, w_k'> = c iff k + k' = L - 1 with
    c = +1 or -1, and distinct chains are orthogonal, which makes the shift
    self-adjoint. Odd chains beyond the one sent to e_0 are paired up with
    c = +1 and c = -1 around a shared index.
    """
    next_index = 1
    e0_free = ctx.odd
    shared = None
    images = []
    for length in lam.parts:
        chain = [None] * length
        scale = 1
        if length % 2:
            middle = (length - 1) // 2
            if e0_free:
                chain[middle] = ctx.basis_vector(ctx.e(0))
                e0_free = False
            elif shared is None:
                shared = next_index
                next_index += 1
                chain[middle] = ctx.basis_vector(ctx.e(shared)) + ctx.basis_vector(ctx.f(shared)) / 2
            else:
                scale = -1
                chain[middle] = ctx.basis_vector(ctx.e(shared)) - ctx.basis_vector(ctx.f(shared)) / 2
                shared = None
        for k in range(length // 2):
            chain[k] = ctx.basis_vector(ctx.f(next_index))
            chain[length - 1 - k] = scale * ctx.basis_vector(ctx.e(next_index))
            next_index += 1
        images.append(chain)
    return images


def nilpotent_representative(N, lam, split=None):
    """Return a self-adjoint nilpotent matrix of Jordan type lam.

    For split=PLUS (and for every non-split lam) this is the chain
    construction; split=MINUS conjugates it by t_n.

    Args:
        N: Size of the matrix
        lam: Partition of N
        split: Split tag, required exactly when the orbit splits

    Returns:
        Matrix: Exact N x N matrix
    """
    if lam.size != N:
        raise PartitionError(f"{format_partition(lam)} is not a partition of {N}")
    OrbitLabel(lam, split)
    ctx = form_matrix(N)
    columns = [w for chain in _chain_images(ctx, lam) for w in chain]
    basis = Matrix.hstack(*columns)
    shift = Matrix.zeros(N, N)
    offset = 0
    for length in lam.parts:
        for k in range(length - 1):
            shift[offset + k + 1, offset + k] = 1
        offset += length
    x = basis * shift * exact_inverse(basis)
    if split is Split.MINUS:
        t = t_matrix(ctx)
        x = t * x * t
    logger.debug(f"Representative of {format_partition(lam)}{split or ''} built")
    return x


def jordan_type(x):
    """Jordan type of a nilpotent matrix from the ranks of its powers.

    Raises:
        NotNilpotentError: If x^N != 0
    """
    N = x.rows
    if N == 0:
        return Partition()
    ranks = [N]
    power = Matrix.eye(N)
    for _ in range(N):
        power = power * x
        ranks.append(exact_rank(power))
    if ranks[-1] != 0:
        raise NotNilpotentError(f"matrix is not nilpotent: rank sequence {ranks}")
    columns = tuple(a - b for a, b in zip(ranks, ranks[1:]) if a != b)
    return conjugate(Partition(columns))


def _commutant_rows(x):
    N = x.rows
    rows = []
    for i in range(N):
        for j in range(N):
            row = [0] * (N * N)
            for k in range(N):
                row[k * N + j] += x[i, k]
                row[i * N + k] -= x[k, j]
            rows.append(row)
    return rows


def _adjoint_rows(ctx, sign):
    """Rows of J y^T J - sign * y = 0."""
    N, J = ctx.N, ctx.J
    rows = []
    for i in range(N):
        for j in range(N):
            row = [0] * (N * N)
            for a in range(N):
                for b in range(N):
                    if J[i, a] and J[b, j]:
                        row[b * N + a] += J[i, a] * J[b, j]
            row[i * N + j] -= sign
            rows.append(row)
    return rows


def centralizer_dims(x, ctx):
    """Dimensions of the centralizer of x in g^+ (skew-adjoint) and g^- (self-adjoint).

    Returns:
        tuple: (dim_plus, dim_minus)
    """
    commutant = _commutant_rows(x)
    dims = []
    for sign in (-1, 1):
        system = Matrix(commutant + _adjoint_rows(ctx, sign))
        dims.append(ctx.N * ctx.N - exact_rank(system))
    return tuple(dims)


def cayley(A):
    """(I - A)^{-1} (I + A)."""
    identity = Matrix.eye(A.rows)
    return exact_inverse(identity - A) * (identity + A)


def random_h_element(N, seed):
    """Draw an element of SO_N with the Cayley transform of a random skew-adjoint matrix.

    Args:
        N: Size of the matrix
        seed: Seed for a private ``random.Random``

    Returns:
        Matrix: g with g^T J g = J and det g = 1
    """
    ctx = form_matrix(N)
    rng = random.Random(seed)
    identity = Matrix.eye(N)
    while True:
        M = Matrix(N, N, lambda i, j: rng.randint(-2, 2))
        A = (M - ctx.J * M.T * ctx.J) * Rational(1, 2)
        if not is_skew_adjoint(A, ctx):
            raise VerificationError(f"Cayley input is not skew-adjoint for N={N}")
        if exact_det(identity - A) != 0:
            break
        logger.debug(f"Resampling degenerate Cayley input for N={N}")
    g = cayley(A)
    if not preserves_form(g, ctx) or exact_det(g) != 1:
        raise VerificationError(f"Cayley transform left SO_{N} for seed {seed}")
    return g


def h_conjugate(g, x, ctx):
    """g x g^{-1}, using g^{-1} = J g^T J for g in O_N."""
    return g * x * ctx.J * g.T * ctx.J
