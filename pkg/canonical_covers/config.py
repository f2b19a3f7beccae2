"""Environment-driven configuration."""

import os
from pathlib import Path

DEFAULT_FIXTURES = Path(__file__).parent / "data" / "fixtures.json"


def get_fixture_path() -> Path:
    """Get the oracle fixture file."""
    path = os.environ.get("CANONICAL_COVERS_FIXTURES")
    return Path(path).expanduser() if path else DEFAULT_FIXTURES


def get_log_level() -> str:
    """Get the logging level name."""
    return os.environ.get("CANONICAL_COVERS_LOG_LEVEL", "WARNING").upper()


def get_max_level() -> int:
    """Get the depth of the generator search.

    Generators can only be certified absent beyond degree 4 if the search
    reaches at least level 5.
    """
    level = int(os.environ.get("CANONICAL_COVERS_MAX_LEVEL", "6"))
    if level < 5:
        raise ValueError("CANONICAL_COVERS_MAX_LEVEL must be at least 5")
    return level
