"""Tests for split cover algebras."""

import random

import pytest
from pydantic import ValidationError

from canonical_covers.algebra.pushforward import (
    CohomologyConstraint,
    cyclic_admissible,
    default_window,
    derive_splitting,
    generic_mu_profile,
    hilbert_fit,
    hyperelliptic_splitting,
    theta_cover_algebra,
    theta_splitting,
    without_iso_profile,
)
from canonical_covers.errors import DomainError, InconsistentDimensionsError, ProfileError
from canonical_covers.models.algebra import CoverAlgebra, GeneratorProfile, MuMode, MuProfile, SplitBundle


class TestThetaSplitting:
    """Tests for the splitting type of a theta-characteristic cover."""

    @pytest.mark.parametrize("n, r, expected", [
        (2, 1, (-4,)),
        (3, 2, (-3, -6)),
        (5, 1, (-2, -2, -2, -4)),
    ])
    def test_examples(self, n, r, expected):
        """Test the splitting types of small covers."""
        assert theta_splitting(n, r).twists == expected

    def test_shape(self):
        """Test rank and degree over a grid."""
        for n in range(2, 7):
            for r in range(1, 6):
                bundle = theta_splitting(n, r)
                assert bundle.rank == n - 1
                assert bundle.degree == -(n - 2) * (r + 1) - (2 * r + 2)

    def test_domain(self):
        """Test degenerate parameters are rejected."""
        with pytest.raises(DomainError):
            theta_splitting(1, 1)
        with pytest.raises(DomainError):
            theta_splitting(3, 0)

    def test_hyperelliptic(self):
        """Test a genus-g double cover has E = O(-g-1)."""
        assert hyperelliptic_splitting(3).twists == (-4,)

    def test_ambiguous_constraints(self):
        """Test constraints with several solutions are rejected."""
        constraints = [CohomologyConstraint(0, 0, 1), CohomologyConstraint(0, 1, 2)]
        with pytest.raises(DomainError):
            derive_splitting(2, constraints)


class TestSplitBundle:
    """Tests for the SplitBundle model."""

    def test_sorted_descending(self):
        """Test twists are normalized to descending order."""
        assert SplitBundle((-6, -3)).twists == (-3, -6)

    def test_json(self):
        """Test the bundle serializes as a plain sorted array."""
        bundle = SplitBundle((-4, 0))
        assert bundle.model_dump(mode="json") == [0, -4]
        assert SplitBundle.model_validate([-4, 0]) == bundle
        assert SplitBundle.model_validate_json(bundle.model_dump_json()) == bundle

    def test_cohomology(self):
        """Test h0 and h1 on P1."""
        bundle = SplitBundle((0, -4))
        assert bundle.h0(0) == 1
        assert bundle.h0(4) == 6
        assert bundle.h1(0) == 3


class TestMuProfile:
    """Tests for multiplication profiles."""

    def test_double_cover(self):
        """Test the double cover pairs E_1 with itself into O only."""
        profile = generic_mu_profile(2)
        assert profile.mode(1, 1, 0) is MuMode.NONZERO
        assert profile.nonzero_targets(1, 1) == {0: MuMode.NONZERO}

    def test_triple_cover_iso(self):
        """Test E_1 x E_1 -> E_2 is an isomorphism for n = 3."""
        assert generic_mu_profile(3).mode(1, 1, 2) is MuMode.ISO

    def test_some_iso(self):
        """Test a larger cover has an isomorphism onto the last summand."""
        profile = generic_mu_profile(6)
        assert any(m is MuMode.ISO for _, targets in profile.items() for m in targets.values())
        assert profile.is_symmetric()

    def test_symmetric_lookup(self):
        """Test entries are looked up independently of the order of the pair."""
        profile = generic_mu_profile(5)
        assert profile.mode(1, 3, 0) == profile.mode(3, 1, 0)

    def test_degree_forcing(self):
        """Test entries that cannot exist for degree reasons become zero."""
        algebra = CoverAlgebra(
            degree=3,
            target_twist=1,
            bundle=SplitBundle((0, -1)),
            profile=MuProfile({(1, 1): {0: MuMode.NONZERO, 2: MuMode.NONZERO}}),
        )
        assert algebra.profile.mode(1, 1, 2) is MuMode.ZERO
        assert algebra.profile.mode(1, 1, 0) is MuMode.NONZERO

    def test_bad_iso(self):
        """Test an isomorphism between different twists is refused."""
        with pytest.raises(ProfileError):
            CoverAlgebra(
                degree=3,
                target_twist=1,
                bundle=theta_splitting(3, 1),
                profile=MuProfile({(1, 1): {0: MuMode.ISO}}),
            )

    def test_rank_mismatch(self):
        """Test the bundle rank must be n - 1."""
        with pytest.raises(DomainError):
            CoverAlgebra(degree=4, target_twist=1, bundle=SplitBundle((-2, -4)))


class TestIntegrality:
    """Tests for the closed subalgebra argument."""

    def test_generic_profile_not_closed(self):
        """Test the generic profile leaves no proper closed subalgebra."""
        assert theta_cover_algebra(4, 1).closed_subalgebra_rank() is None
        assert not theta_cover_algebra(4, 1).integrality_contradiction()

    def test_without_iso_contradiction(self):
        """Test dropping the isomorphism yields a rank n-1 subalgebra."""
        algebra = theta_cover_algebra(4, 1, without_iso_profile(4))
        assert algebra.closed_subalgebra_rank() == 3
        assert algebra.integrality_contradiction()

    def test_double_cover_no_contradiction(self):
        """Test n = 2 never contradicts integrality."""
        assert not theta_cover_algebra(2, 3).integrality_contradiction()


class TestCyclic:
    """Tests for the cyclic cover shape."""

    def test_degrees(self):
        """Test only double and triple covers can be cyclic."""
        assert cyclic_admissible(2, 7)
        assert cyclic_admissible(3, 4)
        assert not cyclic_admissible(4, 1)

    def test_independent_of_r(self):
        """Test the answer does not depend on r."""
        for n in range(2, 8):
            assert len({cyclic_admissible(n, r) for r in range(1, 6)}) == 1


class TestHilbertFit:
    """Tests for recovering split bundles from h0 data."""

    def test_two_summands(self):
        """Test O + O(-4) from its dimensions over k = -1..4."""
        dims = {k: max(k + 1, 0) + max(k - 3, 0) for k in range(-1, 5)}
        assert hilbert_fit(dims).twists == (0, -4)

    def test_trivial(self):
        """Test dimensions k + 1 give the trivial bundle."""
        assert hilbert_fit({k: k + 1 for k in range(-1, 6)}).twists == (0,)

    def test_round_trip_theta(self):
        """Test hilbert_fit inverts the Hilbert function of every theta splitting."""
        for n in range(2, 7):
            for r in range(1, 6):
                bundle = theta_splitting(n, r)
                assert hilbert_fit(bundle.hilbert_function(default_window(r)), rank=n - 1) == bundle

    def test_round_trip_random(self):
        """Test random bundles with twists in [-10, 2] survive the round trip."""
        rng = random.Random(11)
        for _ in range(50):
            bundle = SplitBundle(tuple(rng.randint(-10, 2) for _ in range(rng.randint(1, 5))))
            assert hilbert_fit(bundle.hilbert_function(range(-3, 12)), rank=bundle.rank) == bundle

    def test_inconsistent(self):
        """Test a decreasing second difference is reported at its twist."""
        dims = {-1: 0, 0: 2, 1: 3, 2: 4}
        with pytest.raises(InconsistentDimensionsError) as info:
            hilbert_fit(dims)
        assert info.value.k == 1

    def test_nonzero_start(self):
        """Test the window must start where h0 vanishes."""
        with pytest.raises(InconsistentDimensionsError):
            hilbert_fit({0: 1, 1: 2})

    def test_rank_check(self):
        """Test a too-short window is caught by the rank check."""
        dims = SplitBundle((0, -8)).hilbert_function(range(-1, 5))
        with pytest.raises(InconsistentDimensionsError):
            hilbert_fit(dims, rank=2)


class TestGeneratorProfile:
    """Tests for the GeneratorProfile model."""

    def test_serialization(self):
        """Test the profile serializes degrees 2..4 including zeros."""
        profile = GeneratorProfile(counts={4: 1})
        assert profile.model_dump(mode="json") == {"2": 0, "3": 0, "4": 1}
        assert GeneratorProfile.model_validate({"2": 0, "3": 0, "4": 1}) == profile

    def test_display(self):
        """Test only nonzero counts are displayed."""
        assert str(GeneratorProfile(counts={2: 2, 3: 0})) == "{2: 2}"
        assert str(GeneratorProfile(counts={})) == "{}"

    def test_negative_rejected(self):
        """Test negative counts are rejected."""
        with pytest.raises(ValidationError):
            GeneratorProfile(counts={2: -1})
