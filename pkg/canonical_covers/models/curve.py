"""Data models for explicit oracle curves."""

from typing import Literal, Optional

from pydantic import BaseModel, Field


Grading = Literal["theta", "canonical"]


class CurveFixture(BaseModel):
    """One explicit curve y^n = f(x) as stored in a fixture file."""

    kind: Literal["hyperelliptic", "trigonal"]
    f: list[str] = Field(..., min_length=2, description="Coefficients of f, low to high, as 'p/q' strings")
    r: Optional[int] = Field(None, ge=1, description="Twist with theta = pi*O(r)")
    name: Optional[str] = None


class PluricanonicalBasis(BaseModel):
    """Monomial basis x^i y^j of one graded piece of an explicit curve's ring.

    The piece is H0(pi*O(twist)); in the canonical grading element (i, j)
    stands for x^i y^j (dx / y^(n-1))^level.
    """

    level: int = Field(..., ge=0)
    grading: Grading
    twist: int
    elements: list[tuple[int, int]] = Field(..., description="(x exponent, y exponent)")

    @property
    def dimension(self) -> int:
        return len(self.elements)
