from .algebra import (
    CoverAlgebra,
    GeneratorProfile,
    GradedPiece,
    MuMode,
    MuProfile,
    SplitBundle,
)
from .curve import CurveFixture, Grading, PluricanonicalBasis
from .report import AcceptanceReport, CommandRequest, CriterionResult
from .surface import (
    CoverReport,
    DivisorClass,
    DoubleCoverTower,
    MinimalSurface,
    RuledSurface,
    SurfaceKind,
)
from .threefold import CYCover, EquivalenceRecord, SurjectivityReport

__all__ = [
    "AcceptanceReport",
    "CommandRequest",
    "CoverAlgebra",
    "CoverReport",
    "CriterionResult",
    "CurveFixture",
    "CYCover",
    "DivisorClass",
    "DoubleCoverTower",
    "EquivalenceRecord",
    "GeneratorProfile",
    "Grading",
    "GradedPiece",
    "MinimalSurface",
    "MuMode",
    "MuProfile",
    "PluricanonicalBasis",
    "RuledSurface",
    "SplitBundle",
    "SurfaceKind",
    "SurjectivityReport",
]
