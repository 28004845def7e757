"""
Restriction to the maximal Levi subgroup and the branching cross-check.
"""

from .procedures import (
    ProcedureKind,
    Procedure,
    YDimension,
    available_moves,
    apply_procedure,
    procedures,
    y_dimension,
    restriction_case,
    d_member,
    split_compatible,
    epsilon_multiplicity,
    restriction_targets,
    springer_fiber_half_dimensional,
    springer_fiber_half_dimensional_by_induction
)
from .branching import (
    BranchingReport,
    branching_multiplicities,
    branching_consistency,
    restriction_row_sum,
    branching_sweep
)

__all__ = [
    'ProcedureKind',
    'Procedure',
    'YDimension',
    'available_moves',
    'apply_procedure',
    'procedures',
    'y_dimension',
    'restriction_case',
    'd_member',
    'split_compatible',
    'epsilon_multiplicity',
    'restriction_targets',
    'springer_fiber_half_dimensional',
    'springer_fiber_half_dimensional_by_induction',
    'BranchingReport',
    'branching_multiplicities',
    'branching_consistency',
    'restriction_row_sum',
    'branching_sweep'
]
