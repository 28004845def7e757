import json

import pytest

from springer_gln.core.config import Settings
from springer_gln.core.partitions import Partition
from springer_gln.main import main
from springer_gln.orbits.labels import parse_label


@pytest.fixture
def partition():
    """Build a Partition from its parts: partition(4, 2, 1)"""
    def build(*parts):
        return Partition(tuple(parts))
    return build


@pytest.fixture
def label():
    """Parse a pair label in the text grammar"""
    return parse_label


@pytest.fixture
def default_settings():
    """Built-in settings"""
    return Settings()


@pytest.fixture
def config_file(tmp_path):
    """Write a settings JSON file and return its path"""
    def write(data):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def run_cli(capsys):
    """Run the command-line entry point and return (exit code, stdout, stderr)"""
    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
