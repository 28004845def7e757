"""
Exact rational matrix checks for self-adjoint nilpotent orbits.
"""

from .forms import (
    FormContext,
    form_matrix,
    adjoint,
    is_self_adjoint,
    is_skew_adjoint,
    t_matrix,
    preserves_form,
    exact_rank,
    exact_inverse,
    exact_det
)
from .representatives import (
    nilpotent_representative,
    jordan_type,
    centralizer_dims,
    cayley,
    random_h_element,
    h_conjugate
)
from .normal_form import (
    NormalChain,
    NormalBasis,
    normal_basis,
    gram_failures,
    normal_pattern,
    normalized_gram_failures,
    quadratic_form_gram
)
from .checks import (
    OrbitCheck,
    RegularSplitCheck,
    OracleReport,
    check_orbit,
    check_regular_split,
    run_oracle_checks
)

__all__ = [
    'FormContext',
    'form_matrix',
    'adjoint',
    'is_self_adjoint',
    'is_skew_adjoint',
    't_matrix',
    'preserves_form',
    'exact_rank',
    'exact_inverse',
    'exact_det',
    'nilpotent_representative',
    'jordan_type',
    'centralizer_dims',
    'cayley',
    'random_h_element',
    'h_conjugate',
    'NormalChain',
    'NormalBasis',
    'normal_basis',
    'gram_failures',
    'normal_pattern',
    'normalized_gram_failures',
    'quadratic_form_gram',
    'OrbitCheck',
    'RegularSplitCheck',
    'OracleReport',
    'check_orbit',
    'check_regular_split',
    'run_oracle_checks'
]
