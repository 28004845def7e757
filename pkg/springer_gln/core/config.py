"""
Run settings for springer_gln.

Settings come from built-in defaults, optionally overridden by a JSON file
given with ``--config``; command-line options override both.
"""

import json
import logging
from dataclasses import asdict, dataclass, fields, replace

from springer_gln.core.exceptions import ConfigError

# Configure logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Tunable parameters of the sweeps and generators."""

    series_degree: int = 64
    seed: int = 0
    oracle_max_n: int = 8
    oracle_trials: int = 500
    sweep_max_n: int = 10
    random_permutations: int = 10000
    max_permutation_n: int = 8

    def override(self, **values):
        """Return a copy with every non-None value replaced."""
        changes = {key: value for key, value in values.items() if value is not None}
        return replace(self, **changes)

    def to_dict(self):
        return asdict(self)


def load_settings(config_path=None):
    """Load settings from a JSON file.

    Args:
        config_path: Path to a JSON object with a subset of the Settings fields,
            or None for the defaults

    Returns:
        Settings: The merged settings

    Raises:
        ConfigError: If the file cannot be read, is not a JSON object, or has
            unknown keys or non-integer values
    """
    if config_path is None:
        return Settings()

    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            raw = json.load(f)
    except (FileNotFoundError, json.JSONDecodeError) as e:
        logger.error(f"Error loading configuration: {e}")
        raise ConfigError(f"cannot load configuration {config_path}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigError(f"configuration {config_path} must be a JSON object")

    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")

    for key, value in raw.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise ConfigError(f"configuration key {key} must be an integer, got {value!r}")

    logger.debug(f"Loaded settings from {config_path}: {raw}")
    return replace(Settings(), **raw)
