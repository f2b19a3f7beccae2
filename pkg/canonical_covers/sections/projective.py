"""Sections of line bundles on projective space and block multiplication maps."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from ..errors import WiringError
from ..exact.matrix import RationalMatrix, rank

logger = logging.getLogger(__name__)

# Exponent vector of a monomial in x0..xn.
Monomial = tuple[int, ...]


def h0(ambient_dim: int, twist: int) -> int:
    """Dimension of H0(P^n, O(twist))."""
    if ambient_dim < 0:
        raise ValueError("ambient dimension must be non-negative")
    if twist < 0:
        return 0
    return comb(ambient_dim + twist, ambient_dim)


def h1_line(twist: int) -> int:
    """Dimension of H1(P^1, O(twist))."""
    return max(-twist - 1, 0)


def _exponent_vectors(degree: int, length: int) -> Iterator[Monomial]:
    if length == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _exponent_vectors(degree - first, length - 1):
            yield (first, *rest)


@lru_cache(maxsize=256)
def monomial_basis(ambient_dim: int, twist: int) -> tuple[Monomial, ...]:
    """Degree-`twist` monomials in lexicographically descending order."""
    if twist < 0:
        return ()
    return tuple(_exponent_vectors(twist, ambient_dim + 1))


@lru_cache(maxsize=256)
def _basis_index(ambient_dim: int, twist: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(monomial_basis(ambient_dim, twist))}


def mult_map(ambient_dim: int, a: int, b: int) -> RationalMatrix:
    """Matrix of H0(O(a)) x H0(O(b)) -> H0(O(a+b)).

    Column i * h0(b) + j is the product of basis monomials i and j.
    """
    rows = h0(ambient_dim, a + b)
    if a < 0 or b < 0:
        return RationalMatrix.zeros(rows, 0)
    index = _basis_index(ambient_dim, a + b)
    columns = [
        {index[tuple(p + q for p, q in zip(u, v))]: 1}
        for u in monomial_basis(ambient_dim, a)
        for v in monomial_basis(ambient_dim, b)
    ]
    return RationalMatrix.from_sparse_columns(columns, rows)


@lru_cache(maxsize=4096)
def _product_hits(ambient_dim: int, a: int, b: int, shift: int) -> frozenset[int]:
    """Target rows hit by x0^shift * u * v for monomials u, v of degrees a, b."""
    if a < 0 or b < 0 or shift < 0:
        return frozenset()
    index = _basis_index(ambient_dim, a + b + shift)
    hits = set()
    for u in monomial_basis(ambient_dim, a):
        for v in monomial_basis(ambient_dim, b):
            product = [p + q for p, q in zip(u, v)]
            product[0] += shift
            hits.add(index[tuple(product)])
    return frozenset(hits)


@lru_cache(maxsize=4096)
def _module_image_dim(
    ambient_dim: int, target_twist: int, contributions: frozenset[tuple[int, int, int]]
) -> int:
    rows = h0(ambient_dim, target_twist)
    hits: set[int] = set()
    for a, b, shift in contributions:
        hits |= _product_hits(ambient_dim, a, b, shift)
    # Distinct monomial products are distinct unit columns.
    columns = [{i: 1} for i in sorted(hits)]
    return rank(RationalMatrix.from_sparse_columns(columns, rows))


@dataclass(frozen=True)
class BlockSpace:
    """Direct sum of H0(P^n, O(twist)) blocks."""

    ambient_dim: int
    twists: tuple[int, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(h0(self.ambient_dim, t) for t in self.twists)

    @property
    def dimension(self) -> int:
        return sum(self.dims)


class WiringMode(str, Enum):
    ZERO = "zero"
    MODULE_MULT = "module-mult"
    ISO = "iso-onto-target"


@dataclass(frozen=True)
class Wiring:
    """Routes products of a left block and a right block into a target block.

    MODULE_MULT multiplies sections and then by x0**shift, a nonzero form of
    degree `shift`. ISO identifies the tensor product with the target sheaf,
    so the image is the whole target block whenever both sources have sections.
    """

    left: int
    right: int
    target: int
    mode: WiringMode
    shift: int = 0


def _check_wiring(
    wiring: Wiring, left: BlockSpace, right: BlockSpace, target: BlockSpace
) -> None:
    for name, index, space in (
        ("left", wiring.left, left),
        ("right", wiring.right, right),
        ("target", wiring.target, target),
    ):
        if not 0 <= index < len(space.twists):
            raise WiringError(f"{name} block {index} out of range")
    if wiring.shift < 0:
        raise WiringError(f"negative shift {wiring.shift}")
    if wiring.mode is WiringMode.ISO and wiring.shift != 0:
        raise WiringError("an isomorphism cannot carry a shift")
    expected = left.twists[wiring.left] + right.twists[wiring.right] + wiring.shift
    if wiring.mode is not WiringMode.ZERO and expected != target.twists[wiring.target]:
        raise WiringError(
            f"twist mismatch: {left.twists[wiring.left]} + {right.twists[wiring.right]}"
            f" + {wiring.shift} != {target.twists[wiring.target]}"
        )


def sum_block_images(
    terms: Sequence[tuple[BlockSpace, BlockSpace, Sequence[Wiring]]],
    target: BlockSpace,
) -> dict[int, int]:
    """Per-target-block dimension of the sum of the images of several wired products."""
    iso_hit: set[int] = set()
    contributions: dict[int, set[tuple[int, int, int]]] = {
        i: set() for i in range(len(target.twists))
    }
    for left, right, wirings in terms:
        if left.ambient_dim != target.ambient_dim or right.ambient_dim != target.ambient_dim:
            raise WiringError("blocks live on different projective spaces")
        for wiring in wirings:
            _check_wiring(wiring, left, right, target)
            a = left.twists[wiring.left]
            b = right.twists[wiring.right]
            if wiring.mode is WiringMode.ZERO or a < 0 or b < 0:
                continue
            if wiring.mode is WiringMode.ISO:
                iso_hit.add(wiring.target)
            else:
                contributions[wiring.target].add((a, b, wiring.shift))

    result = {}
    dims = target.dims
    for i, twist in enumerate(target.twists):
        if i in iso_hit:
            result[i] = dims[i]
        elif contributions[i]:
            result[i] = _module_image_dim(
                target.ambient_dim, twist, frozenset(contributions[i])
            )
        else:
            result[i] = 0
    return result


def block_mult_image(
    left: BlockSpace,
    right: BlockSpace,
    wiring: Sequence[Wiring],
    target: BlockSpace | None = None,
) -> dict[int, int]:
    """Image dimension of each target block under one wired product.

    Without an explicit target, each target block's twist is read off the wiring.
    """
    if target is None:
        twists: dict[int, int] = {}
        for w in wiring:
            for index, space in ((w.left, left), (w.right, right)):
                if not 0 <= index < len(space.twists):
                    raise WiringError(f"block {index} out of range")
            twist = left.twists[w.left] + right.twists[w.right] + w.shift
            if twists.setdefault(w.target, twist) != twist:
                raise WiringError(f"conflicting twists for target block {w.target}")
        if sorted(twists) != list(range(len(twists))):
            raise WiringError("target blocks must be numbered contiguously from 0")
        target = BlockSpace(left.ambient_dim, tuple(twists[i] for i in range(len(twists))))
    return sum_block_images([(left, right, wiring)], target)
