"""
Cuspidal pairs and the series decomposition of Psi_N.
"""

from .cuspidal import (
    CuspidalDatum,
    SeriesMembership,
    is_cuspidal,
    enumerate_cuspidal,
    enumerate_series,
    gamma,
    cuspidal_support,
    all_cuspidal_supports,
    series_partition,
    format_series,
    parse_series,
    series_to_json,
    series_from_json
)

__all__ = [
    'CuspidalDatum',
    'SeriesMembership',
    'is_cuspidal',
    'enumerate_cuspidal',
    'enumerate_series',
    'gamma',
    'cuspidal_support',
    'all_cuspidal_supports',
    'series_partition',
    'format_series',
    'parse_series',
    'series_to_json',
    'series_from_json'
]
