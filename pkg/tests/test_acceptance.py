"""Tests for the acceptance criteria runner."""

import json

import pytest

from canonical_covers.acceptance import (
    CRITERIA,
    check_calabi_yau,
    check_codim_grid,
    check_cone_cover,
    check_generator_profiles,
    check_hyperelliptic_noether,
    check_obstructions,
    check_oracle_equivalence,
    check_properties,
    check_scroll_covers,
    expected_beta_codim,
    run_acceptance,
    stated_profile,
)
from canonical_covers.models.algebra import GeneratorProfile


class TestClosedForms:
    """Tests for the closed-form expectations."""

    def test_beta(self):
        """Test closed forms for r = 1 and r > 1."""
        assert expected_beta_codim(5, 1, 1, 1) == 3
        assert expected_beta_codim(2, 1, 2, 2) == 1
        assert expected_beta_codim(3, 1, 2, 2) == 0
        assert expected_beta_codim(4, 3, 1, 2) == 2
        assert expected_beta_codim(4, 3, 3, 3) is None

    def test_profiles(self):
        """Test the stated profiles."""
        assert stated_profile(2, 1) == GeneratorProfile(counts={4: 1})
        assert stated_profile(4, 2) == GeneratorProfile(counts={2: 4, 3: 1})


class TestCriteria:
    """Tests for individual criteria."""

    @pytest.mark.parametrize("check", [
        check_codim_grid,
        check_oracle_equivalence,
        check_hyperelliptic_noether,
        check_generator_profiles,
        check_cone_cover,
        check_scroll_covers,
        check_obstructions,
        check_calabi_yau,
        check_properties,
    ])
    def test_passes(self, check):
        """Test the criterion passes."""
        result = check()
        assert result.passed, result.actual

    def test_ids(self):
        """Test criterion IDs carry their number and run in order."""
        assert list(CRITERIA) == [
            "1-codim-grid",
            "2-oracle-equivalence",
            "3-hyperelliptic-noether",
            "4-generator-profiles",
            "5-cone-cover",
            "6-scroll-covers",
            "7-obstructions",
            "8-calabi-yau",
            "9-properties",
        ]
        assert [int(key.split("-", 1)[0]) for key in CRITERIA] == list(range(1, 10))


class TestRunner:
    """Tests for run_acceptance."""

    def test_selected(self, tmp_path):
        """Test only the selected criteria run and the report is written."""
        path = tmp_path / "report.json"
        report = run_acceptance(path, only=["5-cone-cover", "7-obstructions"])
        assert set(report.results) == {"5-cone-cover", "7-obstructions"}
        assert report.passed
        data = json.loads(path.read_text())
        assert list(data) == ["5-cone-cover", "7-obstructions"]
        assert data["5-cone-cover"]["pass"] is True

    def test_missing_fixtures(self, tmp_path, monkeypatch):
        """Test an unreadable fixture file fails the criterion instead of raising."""
        monkeypatch.setenv("CANONICAL_COVERS_FIXTURES", str(tmp_path / "missing.json"))
        report = run_acceptance(only=["3-hyperelliptic-noether"])
        assert not report.passed
        assert "DomainError" in report.results["3-hyperelliptic-noether"].actual

    def test_bad_coefficient(self, tmp_path, monkeypatch):
        """Test a non-numeric fixture coefficient fails the criterion instead of raising."""
        path = tmp_path / "fixtures.json"
        path.write_text(json.dumps([
            {"kind": "hyperelliptic", "name": "bad", "f": ["x", "0", "0", "0", "0", "0", "1"]},
        ]))
        monkeypatch.setenv("CANONICAL_COVERS_FIXTURES", str(path))
        for key in ("2-oracle-equivalence", "3-hyperelliptic-noether"):
            report = run_acceptance(only=[key])
            assert not report.passed
            assert "DomainError" in report.results[key].actual
