"""splitting_type MCP tool implementation."""

from typing import Any

from pydantic import ValidationError

from ..algebra.pushforward import theta_splitting
from ..errors import CoverError
from ..models.threefold import CYCover
from ..threefolds.calabi_yau import cy_pushforward


async def splitting_type(
    n: int,
    r: int = 1,
    ambient: str = "p1",
) -> dict[str, Any]:
    """Compute the trace-zero part E of pi_* O for a theta-characteristic cover.

    Args:
        n: Degree of the cover
        r: Twist with theta = pi*O(r) (ignored on P3)
        ambient: "p1" for curves over P1, "p3" for Calabi-Yau threefolds over P3

    Returns:
        Dict with the twists of E or an error message
    """
    try:
        if ambient == "p3":
            bundle = cy_pushforward(CYCover(n=n))
        elif ambient == "p1":
            bundle = theta_splitting(n, r)
        else:
            return {"error": f"Unknown ambient space: {ambient}"}
    except (CoverError, ValidationError) as e:
        return {"error": str(e)}

    return {
        "n": n,
        "r": r,
        "ambient": ambient,
        "twists": bundle.model_dump(mode="json"),
    }


TOOL_DEFINITION = {
    "name": "splitting_type",
    "description": "Splitting type of the trace-zero module E in pi_* O = O + E for a degree-n cover given by a theta-characteristic theta = pi*O(r), or for a Calabi-Yau threefold covering P3.",
    "inputSchema": {
        "type": "object",
        "properties": {
            "n": {
                "type": "integer",
                "description": "Degree of the cover (at least 2)"
            },
            "r": {
                "type": "integer",
                "description": "Twist r with theta = pi*O(r) (at least 1, default 1)",
                "default": 1
            },
            "ambient": {
                "type": "string",
                "enum": ["p1", "p3"],
                "description": "Base of the cover (default p1)",
                "default": "p1"
            }
        },
        "required": ["n"]
    }
}
