"""Data models for covers of P^3 by Calabi-Yau threefolds."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class CYCover(BaseModel):
    """Degree-n morphism to P^3 induced by an ample base-point-free B with h0(B) = 4."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Degree of the morphism")
    star_override: Optional[bool] = Field(
        None, description="Force whether E_1 x E_1 -> E_{n-1} is an isomorphism"
    )


class SurjectivityReport(BaseModel):
    """Block-by-block surjectivity of the multiplication maps on H0(B^2) and H0(B^3)."""

    alpha_surjective: bool
    beta_surjective: bool
    gamma_rank: int
    gamma_target: int
    gamma_columns: int
    delta_surjective: bool
    epsilon_surjective: bool
    eta_covers_last: bool


class EquivalenceRecord(BaseModel):
    """The four conditions that are equivalent for such a cover."""

    model_config = ConfigDict(populate_by_name=True)

    n: int
    sectional_genus: int
    n0_b2: bool = Field(..., alias="N0_B2")
    n0_b3: bool = Field(..., alias="N0_B3")
    sectional_genus_gt_3: bool
    c_nonhyperelliptic: bool = Field(..., alias="C_nonhyperelliptic")
    all_equal: bool
