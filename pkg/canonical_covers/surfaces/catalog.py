"""Surfaces of minimal degree and numeric obstructions to covering them."""

from __future__ import annotations

from ..errors import DomainError
from ..models.surface import DivisorClass, MinimalSurface, SurfaceKind
from .divisors import intersect


def minimal_degree_catalog(r: int) -> list[MinimalSurface]:
    """Nondegenerate surfaces of degree r in P^(r+1), up to projective equivalence."""
    if r < 1:
        raise DomainError(f"degree must be at least 1, got {r}")
    if r == 1:
        return [MinimalSurface(kind="plane", degree=1, ambient_dim=2)]
    surfaces = [
        MinimalSurface(kind="scroll", degree=r, ambient_dim=r + 1, scroll=(a, r - a))
        for a in range(1, r // 2 + 1)
    ]
    surfaces.append(MinimalSurface(kind="cone", degree=r, ambient_dim=r + 1, scroll=(0, r)))
    if r == 4:
        surfaces.append(MinimalSurface(kind="veronese", degree=4, ambient_dim=5))
    return surfaces


def ruling_class(hyperplane: DivisorClass) -> DivisorClass:
    """The ruling F with F.F = 0 and F.H = 1 for a scroll hyperplane class H."""
    s = hyperplane.surface
    if s.kind is SurfaceKind.QUADRIC:
        if hyperplane.a == 1:
            return s.divisor(0, 1)
        if hyperplane.b == 1:
            return s.divisor(1, 0)
    elif hyperplane.a == 1:
        return s.divisor(0, 1)
    raise DomainError(f"{hyperplane} is not a scroll hyperplane class on {s.label}")


def parity_obstruction(hyperplane: DivisorClass, n: int) -> bool:
    """Whether a degree-n canonical cover of the scroll is ruled out by parity.

    Pulling back a ruling F gives a curve with (pi*F).(K_X + pi*F) = n F.(H + F),
    which must be even by adjunction.
    """
    if n < 2:
        raise DomainError(f"cover degree must be at least 2, got {n}")
    F = ruling_class(hyperplane)
    return (n * intersect(F, hyperplane + F)) % 2 == 1
