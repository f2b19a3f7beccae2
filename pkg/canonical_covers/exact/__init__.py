from .matrix import (
    RationalMatrix,
    cokernel_basis,
    format_rational,
    image_codim,
    rank,
    to_rational,
)

__all__ = [
    "RationalMatrix",
    "cokernel_basis",
    "format_rational",
    "image_codim",
    "rank",
    "to_rational",
]
