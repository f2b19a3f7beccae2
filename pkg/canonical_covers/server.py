"""MCP Server for canonical-covers."""

import json
import logging

from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

from .tools import calabi_yau, cover_report, generator_profile, multiplication_codim, splitting_type

logger = logging.getLogger(__name__)

TOOL_MODULES = [splitting_type, multiplication_codim, generator_profile, cover_report, calabi_yau]

# Create MCP server
server = Server("canonical-covers")


@server.list_tools()
async def list_tools() -> list[Tool]:
    """List available tools."""
    return [
        Tool(
            name=module.TOOL_DEFINITION["name"],
            description=module.TOOL_DEFINITION["description"],
            inputSchema=module.TOOL_DEFINITION["inputSchema"],
        )
        for module in TOOL_MODULES
    ]


@server.call_tool()
async def call_tool(name: str, arguments: dict) -> list[TextContent]:
    """Handle tool calls."""
    logger.debug("tool %s called with %s", name, arguments)
    try:
        if name == "splitting_type":
            result = await splitting_type.splitting_type(**arguments)
        elif name == "multiplication_codim":
            result = await multiplication_codim.multiplication_codim(**arguments)
        elif name == "generator_profile":
            result = await generator_profile.generator_profile(**arguments)
        elif name == "canonical_cover_report":
            result = await cover_report.canonical_cover_report(**arguments)
        elif name == "calabi_yau_equivalences":
            result = await calabi_yau.calabi_yau_equivalences(**arguments)
        else:
            result = {"error": f"Unknown tool: {name}"}
    except TypeError as e:
        result = {"error": f"Invalid arguments for {name}: {e}"}

    return [TextContent(type="text", text=json.dumps(result, ensure_ascii=False, indent=2))]


async def main():
    """Run the MCP server."""
    async with stdio_server() as (read_stream, write_stream):
        await server.run(
            read_stream,
            write_stream,
            server.create_initialization_options()
        )
