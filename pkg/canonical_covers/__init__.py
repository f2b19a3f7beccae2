"""canonical-covers - Canonical rings of covers of varieties of minimal degree."""

__version__ = "0.1.0"

from .cli import main

__all__ = ["main", "__version__"]
