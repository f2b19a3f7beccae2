"""Tests for the command-line front-end."""

import json

import pytest

from canonical_covers.cli import run


class TestRun:
    """Tests for command dispatch and output."""

    def test_split_type(self, capsys):
        """Test the table output of split-type."""
        assert run(["split-type", "--n", "3", "--r", "2"]) == 0
        assert capsys.readouterr().out.strip() == "[-3, -6]"

    def test_split_type_json(self, capsys):
        """Test JSON output on P3."""
        assert run(["split-type", "--n", "4", "--ambient", "p3", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == [-2, -2, -4]

    def test_beta(self, capsys):
        """Test a single codimension."""
        assert run(["beta", "--n", "2", "--r", "1", "--s", "2", "--t", "2"]) == 0
        assert capsys.readouterr().out.strip() == "codim 1"

    def test_beta_grid(self, capsys):
        """Test the grid lists every (s, t) with t <= s."""
        assert run(["beta-grid", "--n-max", "3", "--r-max", "1", "--level-max", "4", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert {(x["n"], x["s"], x["t"]) for x in rows} == {
            (n, s, t) for n in (2, 3) for s, t in [(1, 1), (2, 1), (3, 1), (2, 2)]
        }

    @pytest.mark.parametrize("argv, expected", [
        (["gens", "--n", "2", "--r", "1"], "{4: 1}"),
        (["gens", "--n", "2", "--r", "1", "--surface"], "{4: 1}"),
        (["gens", "--n", "2", "--r", "1", "--veronese"], "{2: 1}"),
        (["hyperelliptic", "--g", "2"], "{3: 1}"),
    ])
    def test_profiles(self, capsys, argv, expected):
        """Test generator profiles print as degree: count."""
        assert run(argv) == 0
        assert capsys.readouterr().out.strip() == expected

    def test_surface(self, capsys):
        """Test the cone report passes."""
        assert run(["surface", "--family", "cone"]) == 0
        assert "passed             True" in capsys.readouterr().out

    def test_catalog(self, capsys):
        """Test the cubic surfaces."""
        assert run(["catalog", "--r", "3"]) == 0
        assert capsys.readouterr().out.splitlines() == ["S(1,2)", "S(0,3) cone"]

    def test_parity(self, capsys):
        """Test a triple cover of a scroll is obstructed."""
        assert run(["parity", "--n", "3"]) == 0
        assert "obstructed" in capsys.readouterr().out

    def test_cy3(self, capsys):
        """Test the Calabi-Yau record for a double cover."""
        assert run(["cy3", "--n", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["N0_B2"] is False
        assert payload["all_equal"] is True

    def test_oracle(self, capsys, fixture_file):
        """Test the oracle runs over a fixture file."""
        assert run(["oracle", "--fixtures", str(fixture_file), "--max-sum", "4", "--format", "json"]) == 0
        results = json.loads(capsys.readouterr().out)
        assert [r["pushforward"] for r in results] == [[-4], [-2, -4]]
        assert results[0]["codims"]["2,2"] == 1

    def test_acceptance(self, capsys, tmp_path):
        """Test one criterion with a written report."""
        report = tmp_path / "report.json"
        assert run(["paper-check", "--criterion", "7-obstructions", "--report", str(report)]) == 0
        assert json.loads(report.read_text())["7-obstructions"]["pass"] is True
        assert "obstructions" in capsys.readouterr().out


class TestExitCodes:
    """Tests for failure exit codes."""

    def test_usage_error(self, capsys):
        """Test argparse errors exit with 2."""
        assert run(["no-such-command"]) == 2
        assert run(["gens", "--n", "2", "--r", "1", "--surface", "--veronese"]) == 2

    def test_domain_error(self, capsys):
        """Test domain errors exit with 1 and print to stderr."""
        assert run(["beta", "--n", "1", "--r", "1", "--s", "1", "--t", "1"]) == 1
        assert capsys.readouterr().err.startswith("error:")
