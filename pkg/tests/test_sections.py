"""Tests for sections on projective space and block multiplication."""

import pytest

from canonical_covers.engine import ring
from canonical_covers.errors import WiringError
from canonical_covers.exact.matrix import rank
from canonical_covers.sections import projective
from canonical_covers.sections.projective import (
    BlockSpace,
    Wiring,
    WiringMode,
    block_mult_image,
    h0,
    monomial_basis,
    mult_map,
    sum_block_images,
)


class TestSectionSpaces:
    """Tests for h0 and monomial bases."""

    def test_h0(self):
        """Test h0 of line bundles on P1 and P3."""
        assert h0(1, 3) == 4
        assert h0(3, 2) == 10
        assert h0(3, 4) == 35
        assert h0(1, -1) == 0

    def test_basis_order(self):
        """Test monomials are listed lexicographically descending."""
        assert monomial_basis(1, 2) == ((2, 0), (1, 1), (0, 2))
        assert monomial_basis(2, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert monomial_basis(1, -2) == ()

    def test_basis_size(self):
        """Test the basis has h0 elements."""
        for n in range(1, 4):
            for d in range(0, 6):
                assert len(monomial_basis(n, d)) == h0(n, d)

    @pytest.mark.parametrize("cached", [
        projective.monomial_basis,
        projective._basis_index,
        projective._product_hits,
        projective._module_image_dim,
        ring.theta_ring,
    ])
    def test_caches_bounded(self, cached):
        """Test memoized helpers evict instead of growing without limit."""
        assert cached.cache_info().maxsize is not None


class TestMultMap:
    """Tests for multiplication maps."""

    def test_p1_surjective(self):
        """Test H0(O(1)) x H0(O(1)) -> H0(O(2)) is onto."""
        assert rank(mult_map(1, 1, 1)) == 3

    def test_p3_quadrics(self):
        """Test the quadric product on P3 has 100 columns and rank 35."""
        m = mult_map(3, 2, 2)
        assert (m.rows, m.cols) == (35, 100)
        assert rank(m) == 35

    def test_negative_twist(self):
        """Test a negative factor gives the zero map."""
        m = mult_map(1, -1, 3)
        assert m.cols == 0
        assert rank(m) == 0


class TestBlockImages:
    """Tests for wired block products."""

    def test_single_module_mult(self):
        """Test O(2) x O(2) -> O(4) on P1 hits all 5 sections."""
        space = BlockSpace(1, (2,))
        image = block_mult_image(space, space, [Wiring(0, 0, 0, WiringMode.MODULE_MULT)])
        assert image == {0: 5}

    def test_shift_gives_partial_image(self):
        """Test multiplying by a fixed form of positive degree misses sections."""
        space = BlockSpace(1, (1,))
        target = BlockSpace(1, (4,))
        image = sum_block_images(
            [(space, space, [Wiring(0, 0, 0, WiringMode.MODULE_MULT, shift=2)])], target
        )
        assert image == {0: 3}

    def test_iso_fills_target(self):
        """Test an isomorphism onto a block covers it when both sources have sections."""
        left = BlockSpace(1, (0, 0))
        target = BlockSpace(1, (0, 0))
        image = sum_block_images([(left, left, [Wiring(1, 1, 1, WiringMode.ISO)])], target)
        assert image == {0: 0, 1: 1}

    def test_iso_needs_sections(self):
        """Test an isomorphism from an empty block contributes nothing."""
        left = BlockSpace(1, (1, -1))
        right = BlockSpace(1, (1, 1))
        target = BlockSpace(1, (2, 0))
        image = sum_block_images([(left, right, [Wiring(1, 1, 1, WiringMode.ISO)])], target)
        assert image[1] == 0

    def test_zero_mode(self):
        """Test zero wirings contribute nothing."""
        space = BlockSpace(1, (2,))
        target = BlockSpace(1, (4,))
        assert sum_block_images([(space, space, [Wiring(0, 0, 0, WiringMode.ZERO)])], target) == {0: 0}

    def test_out_of_range(self):
        """Test a wiring to a missing block is rejected."""
        space = BlockSpace(1, (2,))
        with pytest.raises(WiringError):
            sum_block_images([(space, space, [Wiring(0, 3, 0, WiringMode.MODULE_MULT)])], space)

    def test_twist_mismatch(self):
        """Test a wiring whose twists do not add up is rejected."""
        space = BlockSpace(1, (2,))
        with pytest.raises(WiringError):
            sum_block_images([(space, space, [Wiring(0, 0, 0, WiringMode.MODULE_MULT)])], BlockSpace(1, (5,)))
