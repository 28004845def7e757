"""
The symmetric bilinear form of GL_N/O_N and exact matrix helpers.

Basis order for V = k^N, n = N // 2:

    N odd:  e_0, e_1, ..., e_n, f_1, ..., f_n
    N even: e_1, ..., e_n, f_1, ..., f_n

with <e_i, f_i> = <f_i, e_i> = 1, <e_0, e_0> = 1 and every other pairing 0.
J is the Gram matrix of that form; it is symmetric and J * J = I.
"""

import logging
from dataclasses import dataclass

from sympy import ImmutableMatrix, Matrix, Rational
from sympy.polys.matrices import DomainMatrix

from springer_gln.core.exceptions import SpringerError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormContext:
    """N together with the exact Gram matrix J of the form."""

    N: int
    J: Matrix

    @property
    def n(self):
        return self.N // 2

    @property
    def odd(self):
        return self.N % 2 == 1

    def e(self, i):
        """Column index of e_i (e_0 only exists for N odd)."""
        if i == 0:
            if not self.odd:
                raise SpringerError(f"e_0 does not exist for even N={self.N}")
            return 0
        if not 1 <= i <= self.n:
            raise SpringerError(f"e_{i} is out of range for N={self.N}")
        return i if self.odd else i - 1

    def f(self, i):
        """Column index of f_i."""
        if not 1 <= i <= self.n:
            raise SpringerError(f"f_{i} is out of range for N={self.N}")
        return self.n + i if self.odd else self.n + i - 1

    def basis_vector(self, index):
        v = Matrix.zeros(self.N, 1)
        v[index, 0] = 1
        return v

    def pairing(self, u, v):
        """<u, v> for column vectors u and v."""
        return (u.T * self.J * v)[0, 0]


def form_matrix(N):
    """Build the FormContext of the form on k^N.

    Args:
        N: Positive integer

    Returns:
        FormContext: With exact J
    """
    if N < 1:
        raise SpringerError(f"the form needs N >= 1, got {N}")
    J = Matrix.zeros(N, N)
    ctx = FormContext(N, None)
    if ctx.odd:
        J[ctx.e(0), ctx.e(0)] = 1
    for i in range(1, ctx.n + 1):
        J[ctx.e(i), ctx.f(i)] = 1
        J[ctx.f(i), ctx.e(i)] = 1
    return FormContext(N, ImmutableMatrix(J))


def adjoint(x, ctx):
    """x* = J^{-1} x^T J; J is its own inverse."""
    return ctx.J * x.T * ctx.J


def is_self_adjoint(x, ctx):
    return adjoint(x, ctx) == x


def is_skew_adjoint(x, ctx):
    """True iff x lies in the Lie algebra of O_N (x* = -x)."""
    return adjoint(x, ctx) == -x


def t_matrix(ctx):
    """The involution t_n swapping e_n and f_n; it preserves the form and has determinant -1."""
    if ctx.n < 1:
        raise SpringerError(f"t_n needs n >= 1, got N={ctx.N}")
    t = Matrix.eye(ctx.N)
    e_n, f_n = ctx.e(ctx.n), ctx.f(ctx.n)
    t[e_n, e_n] = 0
    t[f_n, f_n] = 0
    t[e_n, f_n] = 1
    t[f_n, e_n] = 1
    return t


def preserves_form(g, ctx):
    return g.T * ctx.J * g == ctx.J


def _field_matrix(m):
    return DomainMatrix.from_Matrix(m).to_field()


def exact_rank(m):
    """Rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _field_matrix(m).rank()


def exact_inverse(m):
    """Inverse over the rationals.

    Raises:
        SpringerError: If m is singular
    """
    if exact_det(m) == 0:
        raise SpringerError("matrix is singular")
    return _field_matrix(m).inv().to_Matrix()


def exact_det(m):
    if m.rows == 0:
        return Rational(1)
    field_matrix = _field_matrix(m)
    return field_matrix.domain.to_sympy(field_matrix.det())
