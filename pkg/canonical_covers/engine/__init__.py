from .ring import (
    CoverRing,
    beta_codim,
    beta_image_equal,
    generated_in_degree_at_most_two,
    generator_profile,
    graded_piece,
    hyperelliptic_profile,
    hyperelliptic_ring,
    lifted_alpha_codims,
    surface_canonical_profile,
    theta_char_degree1,
    theta_ring,
    veronese_profile,
)

__all__ = [
    "CoverRing",
    "beta_codim",
    "beta_image_equal",
    "generated_in_degree_at_most_two",
    "generator_profile",
    "graded_piece",
    "hyperelliptic_profile",
    "hyperelliptic_ring",
    "lifted_alpha_codims",
    "surface_canonical_profile",
    "theta_char_degree1",
    "theta_ring",
    "veronese_profile",
]
