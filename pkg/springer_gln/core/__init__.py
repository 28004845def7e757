"""
Core building blocks: partitions, errors and settings.
"""

from .exceptions import (
    SpringerError,
    PartitionError,
    LabelError,
    LabelSyntaxError,
    LabelSemanticError,
    GammaError,
    ProcedureError,
    NotNilpotentError,
    ConfigError,
    VerificationError
)
from .partitions import (
    Block,
    Partition,
    parse_partition,
    format_partition,
    n_invariant,
    enumerate_partitions,
    dominance_leq,
    blocks,
    from_blocks,
    is_even,
    conjugate,
    add_twice,
    box_removals,
    hook_dimension
)
from .config import Settings, load_settings

__all__ = [
    'SpringerError',
    'PartitionError',
    'LabelError',
    'LabelSyntaxError',
    'LabelSemanticError',
    'GammaError',
    'ProcedureError',
    'NotNilpotentError',
    'ConfigError',
    'VerificationError',
    'Block',
    'Partition',
    'parse_partition',
    'format_partition',
    'n_invariant',
    'enumerate_partitions',
    'dominance_leq',
    'blocks',
    'from_blocks',
    'is_even',
    'conjugate',
    'add_twice',
    'box_removals',
    'hook_dimension',
    'Settings',
    'load_settings'
]
