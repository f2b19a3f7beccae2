from .catalog import minimal_degree_catalog, parity_obstruction, ruling_class
from .divisors import (
    canonical_class,
    cohomology,
    euler_characteristic,
    h0,
    intersect,
    is_base_point_free,
)
from .towers import (
    hirzebruch_scroll_tower,
    quadric_cone_tower,
    quadric_scroll_tower,
    tower_canonical,
    tower_family,
    tower_h0K,
    tower_pushforward,
    tower_regular,
    validate_canonical_cover,
)

__all__ = [
    "canonical_class",
    "cohomology",
    "euler_characteristic",
    "h0",
    "hirzebruch_scroll_tower",
    "intersect",
    "is_base_point_free",
    "minimal_degree_catalog",
    "parity_obstruction",
    "quadric_cone_tower",
    "quadric_scroll_tower",
    "ruling_class",
    "tower_canonical",
    "tower_family",
    "tower_h0K",
    "tower_pushforward",
    "tower_regular",
    "validate_canonical_cover",
]
