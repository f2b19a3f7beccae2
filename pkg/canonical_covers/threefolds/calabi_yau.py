"""Projective normality of B for Calabi-Yau threefolds covering P^3."""

from __future__ import annotations

import logging

from ..algebra.pushforward import generic_mu_profile, theta_splitting, without_iso_profile
from ..engine.ring import CoverRing, theta_char_degree1
from ..exact.matrix import rank
from ..models.algebra import CoverAlgebra, MuProfile, SplitBundle
from ..models.threefold import CYCover, EquivalenceRecord, SurjectivityReport
from ..sections.projective import h0, mult_map

logger = logging.getLogger(__name__)

AMBIENT_DIM = 3


def cy_pushforward(c: CYCover) -> SplitBundle:
    """E with phi_* O_X = O + E on P^3.

    A general line pulls back to a curve with theta = B restricted, so E is read
    with target twist 1.
    """
    return theta_splitting(c.n, 1)


def star_condition(c: CYCover) -> bool:
    """Whether E_1 x E_1 -> E_{n-1} is an isomorphism.

    Without it O + E_1 + ... + E_{n-2} is a subalgebra of rank n - 1, which
    contradicts integrality unless n = 2.
    """
    if c.star_override is not None:
        return c.star_override
    if c.n < 3:
        return False
    return _algebra(c.n, without_iso_profile(c.n)).integrality_contradiction()


def _algebra(n: int, profile: MuProfile) -> CoverAlgebra:
    return CoverAlgebra(
        degree=n,
        target_twist=1,
        bundle=theta_splitting(n, 1),
        profile=profile,
        ambient_dim=AMBIENT_DIM,
    )


def _profile(c: CYCover) -> MuProfile:
    if c.n >= 3 and star_condition(c):
        return generic_mu_profile(c.n)
    return without_iso_profile(c.n)


def _ring(c: CYCover) -> CoverRing:
    return CoverRing(_algebra(c.n, _profile(c)), grading_twist=1)


def alpha_beta_surjectivity(c: CYCover) -> SurjectivityReport:
    """Surjectivity of H0(B^2) x H0(B^2) -> H0(B^4) and of H0(B^3) x H0(B^3) -> H0(B^6)."""
    ring = _ring(c)
    gamma = mult_map(AMBIENT_DIM, 2, 2)
    gamma_rank = rank(gamma)

    twists = ring.block_twists(2)
    if c.n >= 3:
        # E_1(2) = O(0): multiplication by H0(O(2)) on either side
        delta = rank(mult_map(AMBIENT_DIM, 2, twists[1])) == h0(AMBIENT_DIM, 2 + twists[1])
        epsilon = rank(mult_map(AMBIENT_DIM, twists[1], 2)) == h0(AMBIENT_DIM, 2 + twists[1])
    else:
        delta = epsilon = True

    level4 = ring.image_dims([(2, 2)])
    last = len(level4) - 1
    eta = level4[last] == ring.piece(4).dims[last]

    report = SurjectivityReport(
        alpha_surjective=ring.codim([(2, 2)]) == 0,
        beta_surjective=ring.codim([(3, 3)]) == 0,
        gamma_rank=gamma_rank,
        gamma_target=gamma.rows,
        gamma_columns=gamma.cols,
        delta_surjective=delta,
        epsilon_surjective=epsilon,
        eta_covers_last=eta,
    )
    logger.debug("n=%d: %s", c.n, report)
    return report


def sectional_genus(c: CYCover) -> int:
    """Genus of a curve cut by two members of |B|: g - 1 = deg theta = n."""
    return c.n + 1


def n0_equivalences(c: CYCover) -> EquivalenceRecord:
    """Compare N0 for B^2 and B^3 with the genus and hyperellipticity of the curve section.

    Multiplication of sections of B is surjective from level 4 on, so N0 for
    B^2 and B^3 reduces to the surjectivity of alpha and beta.
    """
    surjectivity = alpha_beta_surjectivity(c)
    genus = sectional_genus(c)
    flags = {
        "N0_B2": surjectivity.alpha_surjective,
        "N0_B3": surjectivity.beta_surjective,
        "sectional_genus_gt_3": genus > 3,
        "C_nonhyperelliptic": theta_char_degree1(c.n, 1, _profile(c)),
    }
    all_equal = len(set(flags.values())) == 1
    if not all_equal:
        logger.warning("n=%d: equivalent conditions disagree: %s", c.n, flags)
    return EquivalenceRecord(n=c.n, sectional_genus=genus, all_equal=all_equal, **flags)
