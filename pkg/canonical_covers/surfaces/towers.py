"""Iterated double covers of ruled surfaces and their canonical maps."""

from __future__ import annotations

import logging
from typing import Literal

from ..engine.ring import surface_canonical_profile
from ..errors import DomainError
from ..models.surface import CoverReport, DivisorClass, DoubleCoverTower, RuledSurface, SurfaceKind
from .divisors import canonical_class, cohomology, h0, intersect, is_base_point_free

logger = logging.getLogger(__name__)

BERTINI_ASSUMPTION = (
    "a general member of each base-point-free branch system is smooth and the two"
    " branch divisors meet transversally (Bertini)"
)
CONE_ASSUMPTION = (
    "the canonical morphism contracts the negative section; its Stein factorization"
    " maps finitely onto the quadric cone"
)


def tower_pushforward(t: DoubleCoverTower) -> list[DivisorClass]:
    """phi_* O_X = O + O(-L1) + O(-L2) + O(-L1 - L2)."""
    zero = t.base.divisor(0, 0)
    return [zero, -t.L1, -t.L2, -t.L1 - t.L2]


def tower_canonical(t: DoubleCoverTower) -> DivisorClass:
    """Class on the base whose pullback is K_X."""
    return canonical_class(t.base) + t.L1 + t.L2


def tower_h0K(t: DoubleCoverTower) -> int:
    k = tower_canonical(t)
    return sum(h0(k + summand) for summand in tower_pushforward(t))


def tower_regular(t: DoubleCoverTower) -> bool:
    """h1(O_X) = sum of h1 over the pushforward summands vanishes."""
    return all(cohomology(summand)[1] == 0 for summand in tower_pushforward(t))


def _branch_ok(half: DivisorClass, fixed: DivisorClass | None) -> tuple[bool, str]:
    branch = 2 * half
    moving = branch - fixed if fixed is not None else branch
    if h0(branch) == 0:
        return False, f"|{branch}| is empty"
    if not is_base_point_free(moving):
        return False, f"moving part {moving} of |{branch}| has base points"
    if fixed is not None and intersect(moving, fixed) != 0:
        return False, f"moving part {moving} meets the fixed curve {fixed}"
    return True, f"|{moving}| is base-point-free" + (f", fixed part {fixed}" if fixed is not None else "")


def branch_checks(t: DoubleCoverTower) -> list[tuple[bool, str]]:
    return [_branch_ok(t.L1, t.fixed1), _branch_ok(t.L2, t.fixed2)]


def validate_canonical_cover(t: DoubleCoverTower, hyperplane: DivisorClass) -> CoverReport:
    """Check that the canonical map of X is the tower followed by |hyperplane|.

    Failures are reported as fields, never raised.
    """
    k_class = tower_canonical(t)
    target_degree = intersect(hyperplane, hyperplane)
    checks = branch_checks(t)
    assumptions = [BERTINI_ASSUMPTION, *(note for ok, note in checks if ok)]

    image_is_cone = (
        t.base.kind is SurfaceKind.HIRZEBRUCH
        and t.base.e > 0
        and intersect(hyperplane, t.base.divisor(1, 0)) == 0
    )
    if image_is_cone:
        assumptions.append(CONE_ASSUMPTION)

    predicted = surface_canonical_profile(4, target_degree) if target_degree >= 1 else None
    report = CoverReport(
        surface=t.base.label,
        hyperplane=str(hyperplane),
        k_class=str(k_class),
        k_class_ok=k_class == hyperplane,
        regular=tower_regular(t),
        h0K=tower_h0K(t),
        h0_hyperplane=h0(hyperplane),
        cover_degree=len(tower_pushforward(t)),
        target_degree=target_degree,
        predicted_profile=predicted,
        branch_ok=all(ok for ok, _ in checks),
        image_is_cone=image_is_cone,
        assumptions=assumptions,
    )
    logger.debug("tower on %s with L1=%s L2=%s: passed=%s", t.base.label, t.L1, t.L2, report.passed)
    return report


def quadric_scroll_tower(
    m: int, option: Literal[1, 2] = 1, embedding: Literal["f", "f'"] = "f"
) -> tuple[DoubleCoverTower, DivisorClass]:
    """Quadruple cover of S(m, m) = P1xP1 embedded by f + m f' (or m f + f').

    Option 1 takes L1 = f + (m+1) f', L2 = 2f + f'; option 2 swaps them.
    """
    if m < 1:
        raise DomainError(f"m must be at least 1, got {m}")
    y = RuledSurface.quadric()
    first, second = y.divisor(1, m + 1), y.divisor(2, 1)
    hyperplane = y.divisor(1, m)
    if embedding == "f'":
        first, second = y.divisor(m + 1, 1), y.divisor(1, 2)
        hyperplane = y.divisor(m, 1)
    if option == 2:
        first, second = second, first
    return DoubleCoverTower(base=y, L1=first, L2=second), hyperplane


def hirzebruch_scroll_tower(m: int, option: Literal[1, 2] = 1) -> tuple[DoubleCoverTower, DivisorClass]:
    """Quadruple cover of S(m-1, m) = F_1 embedded by C0 + m f.

    Option 1 takes L1 = C0 + (m+1) f, L2 = 2 C0 + 2 f; option 2 swaps them.
    """
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    y = RuledSurface.hirzebruch(1)
    first, second = y.divisor(1, m + 1), y.divisor(2, 2)
    if option == 2:
        first, second = second, first
    return DoubleCoverTower(base=y, L1=first, L2=second), y.divisor(1, m)


def quadric_cone_tower() -> tuple[DoubleCoverTower, DivisorClass]:
    """Quadruple cover of the quadric cone through F_2.

    The second branch divisor is 3 C0 + 6 f plus the negative section C0.
    """
    y = RuledSurface.hirzebruch(2)
    tower = DoubleCoverTower(
        base=y, L1=y.divisor(1, 3), L2=y.divisor(2, 3), fixed2=y.divisor(1, 0)
    )
    return tower, y.divisor(1, 2)


def tower_family(
    family: Literal["quadric", "hirzebruch", "cone"],
    m: int = 1,
    option: Literal[1, 2] = 1,
    embedding: Literal["f", "f'"] = "f",
) -> tuple[DoubleCoverTower, DivisorClass]:
    if family == "quadric":
        return quadric_scroll_tower(m, option, embedding)
    if family == "hirzebruch":
        return hirzebruch_scroll_tower(m, option)
    if family == "cone":
        return quadric_cone_tower()
    raise DomainError(f"unknown tower family {family!r}")
