"""Tests for the MCP tool functions and server dispatch."""

import json

import pytest

from canonical_covers import server
from canonical_covers.tools.calabi_yau import calabi_yau_equivalences
from canonical_covers.tools.cover_report import canonical_cover_report
from canonical_covers.tools.generator_profile import generator_profile
from canonical_covers.tools.multiplication_codim import multiplication_codim
from canonical_covers.tools.splitting_type import splitting_type


class TestSplittingTypeTool:
    """Tests for the splitting_type tool."""

    @pytest.mark.asyncio
    async def test_curve(self):
        """Test E over P1."""
        result = await splitting_type(n=3, r=2)
        assert result["twists"] == [-3, -6]

    @pytest.mark.asyncio
    async def test_threefold(self):
        """Test E over P3."""
        result = await splitting_type(n=4, ambient="p3")
        assert result["twists"] == [-2, -2, -4]

    @pytest.mark.asyncio
    async def test_errors(self):
        """Test bad input becomes an error entry."""
        assert "error" in await splitting_type(n=1)
        assert "error" in await splitting_type(n=3, ambient="p2")
        assert "error" in await splitting_type(n=1, ambient="p3")


class TestMultiplicationCodimTool:
    """Tests for the multiplication_codim tool."""

    @pytest.mark.asyncio
    async def test_codim(self):
        """Test beta(3, 1) for the double cover of the line."""
        result = await multiplication_codim(n=2, r=1, s=3, t=1)
        assert result["codim"] == 1

    @pytest.mark.asyncio
    async def test_bad_level(self):
        """Test level 0 is reported as an error."""
        assert "error" in await multiplication_codim(n=2, r=1, s=0, t=1)


class TestGeneratorProfileTool:
    """Tests for the generator_profile tool."""

    @pytest.mark.asyncio
    async def test_curve(self):
        """Test the theta ring of a trigonal curve with r = 2."""
        result = await generator_profile(kind="curve", n=3, r=2)
        assert result["profile"] == {"2": 2, "3": 1, "4": 0}
        assert result["summary"] == "{2: 2, 3: 1}"

    @pytest.mark.asyncio
    async def test_hyperelliptic(self):
        """Test the genus 2 canonical ring."""
        result = await generator_profile(kind="hyperelliptic", g=2)
        assert result["summary"] == "{3: 1}"

    @pytest.mark.asyncio
    async def test_missing_parameters(self):
        """Test each kind checks its own parameters."""
        assert "error" in await generator_profile(kind="hyperelliptic")
        assert "error" in await generator_profile(kind="surface", n=4)
        assert "error" in await generator_profile(kind="threefold", n=4, r=1)


class TestCoverReportTool:
    """Tests for the canonical_cover_report tool."""

    @pytest.mark.asyncio
    async def test_cone(self):
        """Test the cone cover passes."""
        result = await canonical_cover_report(family="cone")
        assert result["passed"]
        assert result["image_is_cone"]

    @pytest.mark.asyncio
    async def test_errors(self):
        """Test invalid options and families are reported."""
        assert "error" in await canonical_cover_report(family="quadric", option=3)
        assert "error" in await canonical_cover_report(family="quadric", embedding="g")
        assert "error" in await canonical_cover_report(family="plane")


class TestCalabiYauTool:
    """Tests for the calabi_yau_equivalences tool."""

    @pytest.mark.asyncio
    async def test_record(self):
        """Test the record uses display names."""
        result = await calabi_yau_equivalences(n=3)
        assert result["N0_B2"] is True
        assert result["all_equal"] is True

    @pytest.mark.asyncio
    async def test_invalid_degree(self):
        """Test n = 1 is an error."""
        assert "error" in await calabi_yau_equivalences(n=1)


class TestServer:
    """Tests for the MCP server dispatch."""

    @pytest.mark.asyncio
    async def test_list_tools(self):
        """Test every tool module is advertised."""
        tools = await server.list_tools()
        assert {t.name for t in tools} == {
            "splitting_type",
            "multiplication_codim",
            "generator_profile",
            "canonical_cover_report",
            "calabi_yau_equivalences",
        }

    @pytest.mark.asyncio
    async def test_call_tool(self):
        """Test a call returns the tool result as JSON text."""
        content = await server.call_tool("multiplication_codim", {"n": 3, "r": 1, "s": 1, "t": 1})
        assert json.loads(content[0].text)["codim"] == 1

    @pytest.mark.asyncio
    async def test_unknown_tool(self):
        """Test unknown tools and bad arguments are reported."""
        unknown = await server.call_tool("nope", {})
        assert "error" in json.loads(unknown[0].text)
        bad = await server.call_tool("multiplication_codim", {"n": 3})
        assert "Invalid arguments" in json.loads(bad[0].text)["error"]
