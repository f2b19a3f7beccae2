from .calabi_yau import (
    alpha_beta_surjectivity,
    cy_pushforward,
    n0_equivalences,
    sectional_genus,
    star_condition,
)

__all__ = [
    "alpha_beta_surjectivity",
    "cy_pushforward",
    "n0_equivalences",
    "sectional_genus",
    "star_condition",
]
