"""Exception hierarchy for canonical-covers."""


class CoverError(Exception):
    """Base class for every domain error raised by this package."""


class DomainError(CoverError):
    """A parameter lies outside the domain of an operation."""


class InconsistentDimensionsError(CoverError):
    """Observed h0 data is not the Hilbert function of any split bundle."""

    def __init__(self, k: int, message: str):
        super().__init__(f"k={k}: {message}")
        self.k = k


class WiringError(CoverError):
    """A block wiring references a missing block or mismatched twists."""


class LevelMismatchError(CoverError):
    """Two multiplication maps were compared on different graded levels."""


class ProfileError(CoverError):
    """A multiplication profile entry cannot exist on the given bundle."""


class OracleReductionError(CoverError):
    """A product of sections did not reduce into the target basis."""


class StabilizationError(CoverError):
    """A ring generator appeared in a degree where none may exist."""


class ConsistencyError(CoverError):
    """Two independent computations of the same quantity disagree."""
