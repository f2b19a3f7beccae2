"""Splitting types of pushforward algebras and their recovery from h0 data."""

from __future__ import annotations

import logging
from typing import Iterable, Mapping, NamedTuple

from ..errors import DomainError, InconsistentDimensionsError
from ..models.algebra import CoverAlgebra, MuMode, MuProfile, SplitBundle
from ..sections.projective import h0, h1_line

logger = logging.getLogger(__name__)


class CohomologyConstraint(NamedTuple):
    """h^degree of (O + E)(twist) on P^1 must equal value."""

    twist: int
    degree: int
    value: int


def _cohomology(degree: int, twist: int) -> int:
    return h0(1, twist) if degree == 0 else h1_line(twist)


def _twist_window(constraints: list[CohomologyConstraint]) -> tuple[int, int]:
    """Bounds on each summand of E implied by the constraints alone."""
    lower = None
    upper = None
    for c in constraints:
        room = c.value - _cohomology(c.degree, c.twist)
        if room < 0:
            raise DomainError(f"constraint {c} already violated by the O-part")
        if c.degree == 1:
            # h1(O(a + t)) <= room  <=>  a >= -t - 1 - room
            bound = -c.twist - 1 - room
            lower = bound if lower is None else max(lower, bound)
        elif room == 0:
            bound = -c.twist - 1
            upper = bound if upper is None else min(upper, bound)
    if lower is None or upper is None:
        raise DomainError("constraints do not bound the splitting type")
    return lower, upper


def derive_splitting(rank: int, constraints: Iterable[CohomologyConstraint]) -> SplitBundle:
    """Solve for the unique E of the given rank such that O + E meets every constraint."""
    constraints = list(constraints)
    lower, upper = _twist_window(constraints)
    targets = [c.value - _cohomology(c.degree, c.twist) for c in constraints]
    solutions: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], totals: list[int], ceiling: int) -> None:
        if len(prefix) == rank:
            if totals == targets:
                solutions.append(prefix)
            return
        for a in range(ceiling, lower - 1, -1):
            step = [t + _cohomology(c.degree, c.twist + a) for t, c in zip(totals, constraints)]
            if all(s <= target for s, target in zip(step, targets)):
                extend(prefix + (a,), step, a)

    extend((), [0] * len(constraints), upper)
    if len(solutions) != 1:
        raise DomainError(f"expected one splitting type, found {len(solutions)}: {solutions}")
    return SplitBundle(solutions[0])


def theta_constraints(r: int) -> list[CohomologyConstraint]:
    """Cohomology of O_C, theta = pi*O(r) and K_C = theta^2 pushed to P^1."""
    return [
        CohomologyConstraint(0, 0, 1),          # C is connected
        CohomologyConstraint(r, 0, r + 1),      # pi is given by the complete |theta|
        CohomologyConstraint(r, 1, r + 1),      # h1(theta) = h0(theta)
        CohomologyConstraint(2 * r, 1, 1),      # h1(K_C) = 1
    ]


def theta_splitting(n: int, r: int) -> SplitBundle:
    """Trace-zero part E of pi_* O_C for a degree-n cover given by a theta-characteristic.

    Args:
        n: Degree of the cover
        r: Twist with theta = pi*O(r)

    Returns:
        E = (n-2) O(-r-1) + O(-2r-2)
    """
    if n < 2 or r < 1:
        raise DomainError(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    return derive_splitting(n - 1, theta_constraints(r))


def hyperelliptic_splitting(g: int) -> SplitBundle:
    """E for a genus-g double cover of P^1: h0(O_C) = 1 and h1(O_C) = g."""
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return derive_splitting(
        1, [CohomologyConstraint(0, 0, 1), CohomologyConstraint(0, 1, g)]
    )


def generic_mu_profile(n: int) -> MuProfile:
    """Generic multiplication pattern of a theta-characteristic cover.

    For n >= 3 the pairing of the two highest E-summands onto the lowest one
    is an isomorphism; otherwise O + E_1 + ... + E_{n-2} would be a closed
    subalgebra of rank n - 1, which does not divide n.
    """
    if n < 2:
        raise DomainError(f"cover degree must be at least 2, got {n}")
    if n == 2:
        return MuProfile({(1, 1): {0: MuMode.NONZERO}})
    table: dict[tuple[int, int], dict[int, MuMode]] = {}
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            table[(i, j)] = {0: MuMode.NONZERO}
    table[(1, 1)][n - 1] = MuMode.ISO
    return MuProfile(table)


def without_iso_profile(n: int) -> MuProfile:
    """The generic pattern with every map onto the lowest summand removed."""
    profile = generic_mu_profile(n)
    return MuProfile(
        {key: {t: m for t, m in targets.items() if t != n - 1} for key, targets in profile.items()}
    )


def theta_cover_algebra(
    n: int, r: int, profile: MuProfile | None = None, ambient_dim: int = 1
) -> CoverAlgebra:
    return CoverAlgebra(
        degree=n,
        target_twist=r,
        bundle=theta_splitting(n, r),
        profile=profile if profile is not None else generic_mu_profile(n),
        ambient_dim=ambient_dim,
    )


def cyclic_admissible(n: int, r: int) -> bool:
    """Whether E can be O(-c) + O(-2c) + ... + O(-(n-1)c), as for a cyclic cover."""
    theta = theta_splitting(n, r)
    c = -theta.twists[0]
    return SplitBundle(tuple(-k * c for k in range(1, n))) == theta


def default_window(r: int) -> range:
    """Twists from -1 up to 2r + 3, enough for any theta splitting of target twist r."""
    return range(-1, 2 * r + 4)


def hilbert_fit(dims: Mapping[int, int], rank: int | None = None) -> SplitBundle:
    """Recover a split bundle on P^1 from its h0 over a contiguous window of twists.

    The window must start where h0 vanishes. The multiplicity of O(-k) is the
    second difference of h0 at k, and the result is verified by rebuilding
    every observed dimension.

    Raises:
        InconsistentDimensionsError: with the first twist that no split bundle fits
    """
    if len(dims) < 2:
        raise DomainError("need at least two twists")
    ks = sorted(dims)
    if ks != list(range(ks[0], ks[-1] + 1)):
        raise DomainError("twist window must be contiguous")
    k0 = ks[0]
    if dims[k0] != 0:
        raise InconsistentDimensionsError(k0, f"h0 must vanish at the window start, got {dims[k0]}")

    twists: list[int] = []
    previous_step = 0
    for k in ks[1:]:
        step = dims[k] - dims[k - 1]
        multiplicity = step - previous_step
        if multiplicity < 0:
            raise InconsistentDimensionsError(k, f"negative multiplicity {multiplicity} for O({-k})")
        twists.extend([-k] * multiplicity)
        previous_step = step

    bundle = SplitBundle(tuple(twists))
    for k in ks:
        if bundle.h0(k) != dims[k]:
            raise InconsistentDimensionsError(k, f"expected {bundle.h0(k)}, observed {dims[k]}")
    if rank is not None and bundle.rank != rank:
        raise InconsistentDimensionsError(
            ks[-1], f"recovered rank {bundle.rank}, expected {rank}; widen the window"
        )
    logger.debug("hilbert_fit over [%d, %d] -> %s", ks[0], ks[-1], bundle)
    return bundle
