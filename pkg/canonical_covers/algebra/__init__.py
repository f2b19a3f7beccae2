from .pushforward import (
    CohomologyConstraint,
    cyclic_admissible,
    default_window,
    derive_splitting,
    generic_mu_profile,
    hilbert_fit,
    hyperelliptic_splitting,
    theta_cover_algebra,
    theta_splitting,
    without_iso_profile,
)

__all__ = [
    "CohomologyConstraint",
    "cyclic_admissible",
    "default_window",
    "derive_splitting",
    "generic_mu_profile",
    "hilbert_fit",
    "hyperelliptic_splitting",
    "theta_cover_algebra",
    "theta_splitting",
    "without_iso_profile",
]
