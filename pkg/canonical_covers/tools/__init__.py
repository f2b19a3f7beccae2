"""MCP tools for canonical-covers."""
