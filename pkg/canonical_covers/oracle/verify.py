"""Brute-force multiplication maps on explicit curves.

Nothing here consults the block engine: sections are monomials x^i y^j,
products are reduced with y^n = f(x) and ranks come from exact elimination.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable

from ..algebra.pushforward import hilbert_fit
from ..config import get_max_level
from ..errors import DomainError, OracleReductionError, StabilizationError
from ..exact.matrix import RationalMatrix, image_codim
from ..models.algebra import GeneratorProfile, SplitBundle
from ..models.curve import Grading, PluricanonicalBasis
from .curves import CyclicTrigonalCurve, HyperellipticCurve, SuperellipticCurve

logger = logging.getLogger(__name__)

MAX_PRODUCT_LEVEL = 8


def section_basis(curve: SuperellipticCurve, twist: int) -> tuple[tuple[int, int], ...]:
    """Monomials x^i y^j spanning H0(pi*O(twist)), stratified by j."""
    w = curve.weight
    return tuple(
        (i, j) for j in range(curve.exponent) for i in range(twist - j * w + 1)
    )


def sections(curve: SuperellipticCurve, level: int, grading: Grading) -> PluricanonicalBasis:
    if level < 0:
        raise DomainError(f"level must be non-negative, got {level}")
    twist = level * curve.grading_twist(grading)
    return PluricanonicalBasis(
        level=level, grading=grading, twist=twist, elements=list(section_basis(curve, twist))
    )


def hyperelliptic_sections(c: HyperellipticCurve, l: int) -> PluricanonicalBasis:
    """Basis of H0(K^l): x^i (dx/y)^l and x^i y (dx/y)^l."""
    if l < 1:
        raise DomainError(f"level must be at least 1, got {l}")
    return sections(c, l, "canonical")


def trigonal_theta_sections(c: CyclicTrigonalCurve, l: int) -> PluricanonicalBasis:
    """Basis of H0(theta^l) in the strata 1, y, y^2."""
    if l < 1:
        raise DomainError(f"level must be at least 1, got {l}")
    return sections(c, l, "theta")


def _reduce(curve: SuperellipticCurve, i: int, j: int) -> dict[tuple[int, int], Fraction]:
    """x^i y^j in the basis x^a y^b with b < n."""
    n = curve.exponent
    if j < n:
        return {(i, j): Fraction(1)}
    return {(i + k, j - n): c for k, c in curve.coefficients.items()}


def product_matrix(
    curve: SuperellipticCurve,
    pairs: Iterable[tuple[int, int]],
    grading: Grading,
    symmetric: bool = False,
    dedupe: bool = True,
) -> RationalMatrix:
    """Columns are products of level-s and level-t basis elements in the level-(s+t) basis.

    Args:
        curve: Explicit curve
        pairs: Levels (s, t) with a common sum
        grading: "theta" or "canonical"
        symmetric: For s == t keep only products u * v with u <= v
        dedupe: Drop repeated columns

    Returns:
        Matrix with one row per target basis element
    """
    pairs = list(pairs)
    levels = {s + t for s, t in pairs}
    if len(levels) != 1:
        raise DomainError(f"pairs land in different levels: {sorted(levels)}")
    d = curve.grading_twist(grading)
    target = section_basis(curve, levels.pop() * d)
    index = {element: row for row, element in enumerate(target)}

    columns: list[dict[int, Fraction]] = []
    seen: set[tuple[tuple[int, Fraction], ...]] = set()
    for s, t in pairs:
        left = section_basis(curve, s * d)
        right = section_basis(curve, t * d)
        for a, u in enumerate(left):
            for b, v in enumerate(right):
                if symmetric and s == t and b < a:
                    continue
                column: dict[int, Fraction] = {}
                for key, c in _reduce(curve, u[0] + v[0], u[1] + v[1]).items():
                    if key not in index:
                        raise OracleReductionError(
                            f"{curve}: x^{key[0]} y^{key[1]} escapes the level-{s + t} basis"
                        )
                    column[index[key]] = column.get(index[key], Fraction(0)) + c
                if dedupe:
                    signature = tuple(sorted(column.items()))
                    if signature in seen:
                        continue
                    seen.add(signature)
                columns.append(column)
    return RationalMatrix.from_sparse_columns(columns, len(target))


def oracle_mult_codim(curve: SuperellipticCurve, s: int, t: int, grading: Grading = "theta") -> int:
    """Codimension of the image of the multiplication map on the explicit curve."""
    if s < 1 or t < 1:
        raise DomainError(f"need s, t >= 1, got ({s}, {t})")
    if s + t > MAX_PRODUCT_LEVEL:
        raise DomainError(f"s + t must be at most {MAX_PRODUCT_LEVEL}")
    return image_codim(product_matrix(curve, [(s, t)], grading))


def symmetric_square_matrix(curve: SuperellipticCurve, grading: Grading = "canonical") -> RationalMatrix:
    """Sym^2 H0(R_1) -> H0(R_2) with one column per unordered pair of basis elements."""
    return product_matrix(curve, [(1, 1)], grading, symmetric=True, dedupe=False)


def oracle_pushforward_split(curve: SuperellipticCurve) -> SplitBundle:
    """Trace-zero part of pi_* O_C read off the dimensions of explicit function spaces."""
    top = (curve.exponent - 1) * curve.weight
    dims = {k: len(section_basis(curve, k)) for k in range(-1, top + 2)}
    return hilbert_fit(dims, rank=curve.exponent).without(0)


def theta_square_check(curve: SuperellipticCurve, r: int | None = None) -> bool:
    """Whether K_C = theta^2 for theta = pi*O(r).

    The frame dx / y^(n-1) has no zeros or poles over the affine line, so its
    divisor is a multiple of the fibre over infinity and K_C - 2 theta = pi*O(c)
    with c read from the frame order there. A pullback from P1 of degree n c is
    trivial exactly when c = 0.
    """
    r = r if r is not None else curve.theta_twist
    branch, infinity = curve.frame_orders
    if branch:
        return False
    return curve.exponent * (infinity - 2 * r) == 0


def canonical_profile_bruteforce(
    curve: SuperellipticCurve, grading: Grading = "canonical", max_level: int | None = None
) -> GeneratorProfile:
    """Generator profile from codimensions of sums of explicit multiplication maps."""
    if curve.genus < 2:
        raise DomainError(f"genus must be at least 2, got {curve.genus}")
    max_level = max_level if max_level is not None else get_max_level()
    counts = {}
    for level in range(2, max_level + 1):
        pairs = [(a, level - a) for a in range(1, level // 2 + 1)]
        missing = image_codim(product_matrix(curve, pairs, grading))
        logger.debug("%s level %d: codim %d", curve, level, missing)
        if missing:
            counts[level] = missing
    late = {d: c for d, c in counts.items() if d > 4}
    if late:
        raise StabilizationError(f"{curve}: generators beyond degree 4: {late}")
    return GeneratorProfile(counts=counts)
