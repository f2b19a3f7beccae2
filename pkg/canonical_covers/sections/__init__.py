from .projective import (
    BlockSpace,
    Monomial,
    Wiring,
    WiringMode,
    block_mult_image,
    h0,
    h1_line,
    monomial_basis,
    mult_map,
    sum_block_images,
)

__all__ = [
    "BlockSpace",
    "Monomial",
    "Wiring",
    "WiringMode",
    "block_mult_image",
    "h0",
    "h1_line",
    "monomial_basis",
    "mult_map",
    "sum_block_images",
]
