"""Data models for ruled surfaces, divisor classes and cover reports."""

from __future__ import annotations

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DomainError
from .algebra import GeneratorProfile


class SurfaceKind(str, Enum):
    HIRZEBRUCH = "hirzebruch"
    QUADRIC = "p1xp1"


class RuledSurface(BaseModel):
    """F_e with C0^2 = -e, C0.f = 1, f^2 = 0, or P1xP1 with f.f' = 1."""

    model_config = ConfigDict(frozen=True)

    kind: SurfaceKind
    e: int = Field(0, ge=0, description="Self-intersection -e of the negative section")

    @model_validator(mode="after")
    def _quadric_has_no_e(self) -> RuledSurface:
        if self.kind is SurfaceKind.QUADRIC and self.e != 0:
            raise ValueError("P1xP1 has no negative section")
        return self

    @classmethod
    def hirzebruch(cls, e: int) -> RuledSurface:
        return cls(kind=SurfaceKind.HIRZEBRUCH, e=e)

    @classmethod
    def quadric(cls) -> RuledSurface:
        return cls(kind=SurfaceKind.QUADRIC)

    @property
    def label(self) -> str:
        return "P1xP1" if self.kind is SurfaceKind.QUADRIC else f"F_{self.e}"

    def divisor(self, a: int, b: int) -> DivisorClass:
        return DivisorClass(surface=self, a=a, b=b)


class DivisorClass(BaseModel):
    """a C0 + b f on F_e, or a f + b f' on P1xP1."""

    model_config = ConfigDict(frozen=True)

    surface: RuledSurface
    a: int
    b: int

    def _same_surface(self, other: DivisorClass) -> None:
        if self.surface != other.surface:
            raise DomainError(f"classes on {self.surface.label} and {other.surface.label}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same_surface(other)
        return DivisorClass(surface=self.surface, a=self.a + other.a, b=self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(surface=self.surface, a=-self.a, b=-self.b)

    def __rmul__(self, k: int) -> DivisorClass:
        return DivisorClass(surface=self.surface, a=k * self.a, b=k * self.b)

    def __str__(self) -> str:
        first, second = ("f", "f'") if self.surface.kind is SurfaceKind.QUADRIC else ("C0", "f")
        terms = []
        for coefficient, name in ((self.a, first), (self.b, second)):
            if coefficient == 0:
                continue
            sign = "-" if coefficient < 0 else "+"
            magnitude = "" if abs(coefficient) == 1 else str(abs(coefficient))
            terms.append(f"{sign}{magnitude}{name}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text


class DoubleCoverTower(BaseModel):
    """X -> X1 -> Y: double cover branched on D1 in |2 L1|, then on the pullback of D2 in |2 L2|.

    A branch divisor may carry a fixed curve; the moving part is 2L - fixed.
    """

    base: RuledSurface
    L1: DivisorClass
    L2: DivisorClass
    fixed1: Optional[DivisorClass] = None
    fixed2: Optional[DivisorClass] = None

    @model_validator(mode="after")
    def _same_base(self) -> DoubleCoverTower:
        for d in (self.L1, self.L2, self.fixed1, self.fixed2):
            if d is not None and d.surface != self.base:
                raise ValueError(f"class {d} does not live on {self.base.label}")
        return self


class CoverReport(BaseModel):
    """Outcome of checking that a tower is a canonical cover of a minimal-degree surface."""

    surface: str
    hyperplane: str
    k_class: str
    k_class_ok: bool
    regular: bool
    h0K: int
    h0_hyperplane: int
    cover_degree: int
    target_degree: int
    predicted_profile: Optional[GeneratorProfile] = None
    branch_ok: bool
    image_is_cone: bool = False
    assumptions: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.cover_degree == 4
            and self.k_class_ok
            and self.regular
            and self.h0K == self.h0_hyperplane
            and self.branch_ok
        )


class MinimalSurface(BaseModel):
    """A nondegenerate surface of degree r in P^(r+1)."""

    kind: Literal["plane", "veronese", "scroll", "cone"]
    degree: int = Field(..., ge=1)
    ambient_dim: int
    scroll: Optional[tuple[int, int]] = Field(None, description="(a, b) for S(a, b)")

    @property
    def label(self) -> str:
        if self.kind == "plane":
            return "P2"
        if self.kind == "veronese":
            return "Veronese surface"
        a, b = self.scroll
        return f"S({a},{b})" + (" cone" if self.kind == "cone" else "")
