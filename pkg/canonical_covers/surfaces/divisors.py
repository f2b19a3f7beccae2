"""Intersection numbers and cohomology of line bundles on ruled surfaces."""

from __future__ import annotations

from ..errors import DomainError
from ..models.surface import DivisorClass, RuledSurface, SurfaceKind


def intersect(D1: DivisorClass, D2: DivisorClass) -> int:
    if D1.surface != D2.surface:
        raise DomainError(f"classes on {D1.surface.label} and {D2.surface.label}")
    cross = D1.a * D2.b + D2.a * D1.b
    if D1.surface.kind is SurfaceKind.QUADRIC:
        return cross
    return -D1.surface.e * D1.a * D2.a + cross


def canonical_class(s: RuledSurface) -> DivisorClass:
    if s.kind is SurfaceKind.QUADRIC:
        return s.divisor(-2, -2)
    return s.divisor(-2, -(s.e + 2))


def fiber(s: RuledSurface) -> DivisorClass:
    return s.divisor(0, 1)


def negative_section(s: RuledSurface) -> DivisorClass:
    if s.kind is SurfaceKind.QUADRIC:
        raise DomainError("P1xP1 has no negative section")
    return s.divisor(1, 0)


def h0(D: DivisorClass) -> int:
    """h0 via the pushforward to P^1: sum of O(b - k e) for k = 0..a."""
    if D.a < 0:
        return 0
    if D.surface.kind is SurfaceKind.QUADRIC:
        return (D.a + 1) * max(D.b + 1, 0)
    return sum(max(D.b - k * D.surface.e + 1, 0) for k in range(D.a + 1))


def euler_characteristic(D: DivisorClass) -> int:
    """Riemann-Roch: chi(O(D)) = 1 + D.(D - K) / 2."""
    return 1 + intersect(D, D - canonical_class(D.surface)) // 2


def cohomology(D: DivisorClass) -> tuple[int, int, int]:
    """(h0, h1, h2) of O(D), with h2 from Serre duality."""
    zero = h0(D)
    two = h0(canonical_class(D.surface) - D)
    one = zero + two - euler_characteristic(D)
    return zero, one, two


def is_base_point_free(D: DivisorClass) -> bool:
    if D.surface.kind is SurfaceKind.QUADRIC:
        return D.a >= 0 and D.b >= 0
    return D.a >= 0 and D.b >= D.a * D.surface.e
