"""
Dimension arithmetic, signed-permutation bounds and counting series.
"""

from .dims import (
    LeviShape,
    OpenOrbitCheck,
    SAndDelta,
    nu_H,
    delta_P,
    dim_X_uni,
    dim_Y_stratum,
    d_O,
    d0,
    s_and_delta,
    open_orbit_check
)
from .signed_permutations import (
    SignedPermutation,
    BoundReport,
    identity,
    negation,
    random_signed_permutation,
    b_w,
    delta_Q_w,
    bound_sweep
)
from .counting import (
    DEFAULT_DEGREE,
    PowerSeries,
    CountRow,
    SplitCountReport,
    TotalCountReport,
    partition_series,
    q1_series,
    q2_series,
    partition_count,
    q1,
    q2,
    cuspidal_count,
    total_count_identity,
    split_count_identities,
    count_table
)

__all__ = [
    'LeviShape',
    'OpenOrbitCheck',
    'SAndDelta',
    'nu_H',
    'delta_P',
    'dim_X_uni',
    'dim_Y_stratum',
    'd_O',
    'd0',
    's_and_delta',
    'open_orbit_check',
    'SignedPermutation',
    'BoundReport',
    'identity',
    'negation',
    'random_signed_permutation',
    'b_w',
    'delta_Q_w',
    'bound_sweep',
    'DEFAULT_DEGREE',
    'PowerSeries',
    'CountRow',
    'SplitCountReport',
    'TotalCountReport',
    'partition_series',
    'q1_series',
    'q2_series',
    'partition_count',
    'q1',
    'q2',
    'cuspidal_count',
    'total_count_identity',
    'split_count_identities',
    'count_table'
]
