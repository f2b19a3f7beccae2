from .curves import (
    CyclicTrigonalCurve,
    HyperellipticCurve,
    SuperellipticCurve,
    curve_from_fixture,
    load_fixtures,
    polynomial,
)
from .verify import (
    canonical_profile_bruteforce,
    hyperelliptic_sections,
    oracle_mult_codim,
    oracle_pushforward_split,
    product_matrix,
    section_basis,
    sections,
    symmetric_square_matrix,
    theta_square_check,
    trigonal_theta_sections,
)

__all__ = [
    "CyclicTrigonalCurve",
    "HyperellipticCurve",
    "SuperellipticCurve",
    "canonical_profile_bruteforce",
    "curve_from_fixture",
    "hyperelliptic_sections",
    "load_fixtures",
    "oracle_mult_codim",
    "oracle_pushforward_split",
    "polynomial",
    "product_matrix",
    "section_basis",
    "sections",
    "symmetric_square_matrix",
    "theta_square_check",
    "trigonal_theta_sections",
]
