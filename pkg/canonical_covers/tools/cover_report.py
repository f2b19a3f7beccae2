"""canonical_cover_report MCP tool implementation."""

from typing import Any

from ..errors import CoverError
from ..surfaces.towers import tower_family, validate_canonical_cover


async def canonical_cover_report(
    family: str,
    m: int = 2,
    option: int = 1,
    embedding: str = "f",
) -> dict[str, Any]:
    """Validate one of the built-in quadruple covers of a surface of minimal degree.

    Args:
        family: "quadric" (P1xP1), "hirzebruch" (F1) or "cone" (quadric cone via F2)
        m: Scroll parameter of the hyperplane class
        option: Which of the two branch assignments to use (1 or 2)
        embedding: For the quadric, "f" for f + m f' or "f'" for m f + f'

    Returns:
        The cover report or an error message
    """
    if option not in (1, 2):
        return {"error": f"Option must be 1 or 2, got {option}"}
    if embedding not in ("f", "f'"):
        return {"error": f"Unknown embedding: {embedding}"}
    try:
        tower, hyperplane = tower_family(family, m, option, embedding)
        report = validate_canonical_cover(tower, hyperplane)
    except CoverError as e:
        return {"error": str(e)}

    return {**report.model_dump(mode="json"), "passed": report.passed}


TOOL_DEFINITION = {
    "name": "canonical_cover_report",
    "description": "Check that an iterated double cover of P1xP1, F1 or F2 is a canonical quadruple cover of a surface of minimal degree: canonical class, regularity, h0(K), branch systems and the predicted canonical ring generators.",
    "inputSchema": {
        "type": "object",
        "properties": {
            "family": {
                "type": "string",
                "enum": ["quadric", "hirzebruch", "cone"],
                "description": "Base surface family"
            },
            "m": {"type": "integer", "description": "Scroll parameter (default 2)", "default": 2},
            "option": {"type": "integer", "enum": [1, 2], "description": "Branch assignment (default 1)", "default": 1},
            "embedding": {"type": "string", "enum": ["f", "f'"], "description": "Quadric embedding (default f)", "default": "f"}
        },
        "required": ["family"]
    }
}
