"""
H-orbits, local systems and their labels.
"""

from .catalog import (
    PLUS,
    MINUS,
    Split,
    GroupContext,
    OrbitLabel,
    PairLabel,
    ComponentGroups,
    requires_split,
    orbit_dimension,
    enumerate_orbits,
    component_groups,
    valid_sign_vectors,
    enumerate_pairs,
    regular_orbits,
    subregular_partition,
    closure_contains
)
from .labels import (
    GRAMMAR_HELP,
    parse_label,
    format_label,
    parse_orbit,
    parse_signs,
    pair_to_json,
    pair_from_json,
    orbit_to_json,
    orbit_from_json
)

__all__ = [
    'PLUS',
    'MINUS',
    'Split',
    'GroupContext',
    'OrbitLabel',
    'PairLabel',
    'ComponentGroups',
    'requires_split',
    'orbit_dimension',
    'enumerate_orbits',
    'component_groups',
    'valid_sign_vectors',
    'enumerate_pairs',
    'regular_orbits',
    'subregular_partition',
    'closure_contains',
    'GRAMMAR_HELP',
    'parse_label',
    'format_label',
    'parse_orbit',
    'parse_signs',
    'pair_to_json',
    'pair_from_json',
    'orbit_to_json',
    'orbit_from_json'
]
