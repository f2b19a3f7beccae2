"""Block calculus for section rings of split cover algebras.

R_l = H0(pi* O(l d)) = H0(O(l d)) + sum_i H0(O(l d + a_i)) by the projection
formula, so every multiplication map R_s x R_t -> R_{s+t} is a direct sum of
monomial maps between blocks, routed by the module structure and the
multiplication profile of the algebra.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from ..algebra.pushforward import hyperelliptic_splitting, theta_cover_algebra
from ..config import get_max_level
from ..errors import ConsistencyError, DomainError, LevelMismatchError, StabilizationError
from ..models.algebra import CoverAlgebra, GeneratorProfile, GradedPiece, MuMode, MuProfile
from ..sections.projective import BlockSpace, Wiring, WiringMode, sum_block_images

logger = logging.getLogger(__name__)

# Generators never occur past this degree for covers of minimal-degree varieties.
GENERATOR_DEGREE_BOUND = 4


@dataclass(frozen=True)
class CoverRing:
    """Section ring of pi* O(grading_twist) for a split cover algebra."""

    algebra: CoverAlgebra
    grading_twist: int

    @property
    def ambient_dim(self) -> int:
        return self.algebra.ambient_dim

    def block_twists(self, level: int) -> tuple[int, ...]:
        base = level * self.grading_twist
        return (base, *(base + a for a in self.algebra.bundle.twists))

    def piece(self, level: int) -> BlockSpace:
        return BlockSpace(self.ambient_dim, self.block_twists(level))

    def graded_piece(self, level: int) -> GradedPiece:
        if level < 0:
            raise DomainError(f"level must be non-negative, got {level}")
        space = self.piece(level)
        return GradedPiece(level=level, twists=list(space.twists), dims=list(space.dims))

    @property
    def wiring(self) -> tuple[Wiring, ...]:
        """Block routing of R_s x R_t -> R_{s+t}; the same for every (s, t)."""
        algebra = self.algebra
        n = algebra.degree
        wirings = [Wiring(0, 0, 0, WiringMode.MODULE_MULT)]
        for k in range(1, n):
            wirings.append(Wiring(0, k, k, WiringMode.MODULE_MULT))
            wirings.append(Wiring(k, 0, k, WiringMode.MODULE_MULT))
        for (i, j), targets in algebra.profile.items():
            for left, right in {(i, j), (j, i)}:
                for target, mode in targets.items():
                    if mode is MuMode.ISO:
                        wirings.append(Wiring(left, right, target, WiringMode.ISO))
                    elif mode is MuMode.NONZERO:
                        shift = (
                            algebra.target_twist_of(target)
                            - algebra.bundle.twists[i - 1]
                            - algebra.bundle.twists[j - 1]
                        )
                        wirings.append(Wiring(left, right, target, WiringMode.MODULE_MULT, shift))
        return tuple(wirings)

    def image_dims(self, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
        """Per-block dimensions of the sum of the images of beta(s, t) over `pairs`."""
        pairs = list(pairs)
        if not pairs:
            raise DomainError("no multiplication maps given")
        levels = {s + t for s, t in pairs}
        if len(levels) != 1:
            raise LevelMismatchError(f"maps land in different levels: {sorted(levels)}")
        for s, t in pairs:
            if s < 1 or t < 1:
                raise DomainError(f"beta({s}, {t}) needs s, t >= 1")
        wiring = self.wiring
        terms = [(self.piece(s), self.piece(t), wiring) for s, t in pairs]
        image = sum_block_images(terms, self.piece(levels.pop()))
        return tuple(image[i] for i in range(len(image)))

    def codim(self, pairs: Iterable[tuple[int, int]]) -> int:
        """Codimension of the sum of images inside the common target level."""
        pairs = list(pairs)
        images = self.image_dims(pairs)
        s, t = pairs[0]
        return self.piece(s + t).dimension - sum(images)

    def images_equal(self, first: tuple[int, int], second: tuple[int, int]) -> bool:
        a = self.image_dims([first])
        b = self.image_dims([second])
        both = self.image_dims([first, second])
        return a == b == both

    def generator_profile(
        self, max_level: int | None = None, step: int = 1
    ) -> GeneratorProfile:
        """Minimal generators of the subring generated by R_step, by degree.

        A new generator in level l is needed for each dimension missing from the
        sum of the images of beta(a, l - a). With step > 1 only the subring
        sum_m R_{m * step} is considered and degrees are counted in m.
        """
        max_level = max_level if max_level is not None else get_max_level()
        counts: dict[int, int] = {}
        for m in range(2, max_level + 1):
            pairs = [(step * a, step * (m - a)) for a in range(1, m // 2 + 1)]
            missing = self.codim(pairs)
            logger.debug("level %d: %d new generators", m, missing)
            if missing:
                counts[m] = missing
        late = {d: c for d, c in counts.items() if d > GENERATOR_DEGREE_BOUND}
        if late:
            raise StabilizationError(f"generators beyond degree {GENERATOR_DEGREE_BOUND}: {late}")
        return GeneratorProfile(counts=counts)


@lru_cache(maxsize=128)
def theta_ring(n: int, r: int) -> CoverRing:
    """Ring of a degree-n cover with theta = pi*O(r) and the generic profile."""
    return CoverRing(theta_cover_algebra(n, r), grading_twist=r)


def _theta_ring(n: int, r: int, profile: MuProfile | None = None) -> CoverRing:
    if n < 2 or r < 1:
        raise DomainError(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    if profile is None:
        return theta_ring(n, r)
    return CoverRing(theta_cover_algebra(n, r, profile), grading_twist=r)


def hyperelliptic_ring(g: int) -> CoverRing:
    """Canonical ring of a genus-g double cover, graded by K = pi*O(g - 1)."""
    algebra = CoverAlgebra(
        degree=2,
        target_twist=1,
        bundle=hyperelliptic_splitting(g),
        profile=MuProfile({(1, 1): {0: MuMode.NONZERO}}),
    )
    return CoverRing(algebra, grading_twist=g - 1)


def graded_piece(n: int, r: int, level: int) -> GradedPiece:
    return _theta_ring(n, r).graded_piece(level)


def beta_codim(n: int, r: int, s: int, t: int, profile: MuProfile | None = None) -> int:
    """Codimension of the image of beta(s, t): R_s x R_t -> R_{s+t}."""
    return _theta_ring(n, r, profile).codim([(s, t)])


def beta_image_equal(n: int, r: int, s1: int, t1: int, s2: int, t2: int) -> bool:
    """Whether beta(s1, t1) and beta(s2, t2) have the same image."""
    if s1 + t1 != s2 + t2:
        raise LevelMismatchError(f"levels {s1 + t1} and {s2 + t2} differ")
    return _theta_ring(n, r).images_equal((s1, t1), (s2, t2))


def generator_profile(
    n: int, r: int, profile: MuProfile | None = None, max_level: int | None = None
) -> GeneratorProfile:
    return _theta_ring(n, r, profile).generator_profile(max_level)


def surface_canonical_profile(n: int, r: int) -> GeneratorProfile:
    """Generators of the canonical ring of a degree-n canonical cover of a surface of degree r.

    Raises:
        ConsistencyError: if the block computation disagrees with the closed form
    """
    if n < 2 or r < 1:
        raise DomainError(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    if (n, r) == (2, 1):
        expected = GeneratorProfile(counts={4: 1})
    else:
        expected = GeneratorProfile(counts={2: r * (n - 2), 3: r - 1})
    computed = generator_profile(n, r)
    if computed != expected:
        raise ConsistencyError(f"block calculus gives {computed}, closed form {expected}")
    return expected


def hyperelliptic_profile(g: int) -> GeneratorProfile:
    """Generators of the canonical ring of a hyperelliptic curve of genus g."""
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return hyperelliptic_ring(g).generator_profile()


def veronese_profile(n: int, r: int, max_level: int | None = None) -> GeneratorProfile:
    """Generators of sum_m H0(theta^(2m)), the canonical ring of the curve."""
    return _theta_ring(n, r).generator_profile(max_level, step=2)


def theta_char_degree1(n: int, r: int, profile: MuProfile | None = None) -> bool:
    """Whether the canonical ring is generated in degree 1.

    K = theta^2, so the maps to check are beta(2m, 2) for m <= 4.
    """
    if n < 2 or r < 1:
        raise DomainError(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    if n * r + 1 < 3:
        raise DomainError(f"genus {n * r + 1} is below 3")
    ring = _theta_ring(n, r, profile)
    return all(ring.codim([(2 * m, 2)]) == 0 for m in range(1, 5))


def lifted_alpha_codims(n: int, r: int) -> dict[str, int]:
    """Codimensions of the surface maps alpha(l, 1) for l <= 5 and alpha(2, 2).

    They coincide with the curve maps beta, which is how the surface profile
    is read off the curve.
    """
    ring = _theta_ring(n, r)
    codims = {f"{l},1": ring.codim([(l, 1)]) for l in range(1, 6)}
    codims["2,2"] = ring.codim([(2, 2)])
    return codims


def generated_in_degree_at_most_two(n: int, r: int) -> bool:
    return generator_profile(n, r).max_degree <= 2
