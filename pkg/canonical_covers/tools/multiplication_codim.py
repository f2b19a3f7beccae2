"""multiplication_codim MCP tool implementation."""

from typing import Any

from ..engine.ring import beta_codim
from ..errors import CoverError


async def multiplication_codim(
    n: int,
    r: int,
    s: int,
    t: int,
) -> dict[str, Any]:
    """Codimension of the image of R_s x R_t -> R_{s+t}.

    Args:
        n: Degree of the cover
        r: Twist with theta = pi*O(r)
        s: Level of the left factor
        t: Level of the right factor

    Returns:
        Dict with the codimension or an error message
    """
    try:
        codim = beta_codim(n, r, s, t)
    except CoverError as e:
        return {"error": str(e)}

    return {"n": n, "r": r, "s": s, "t": t, "codim": codim}


TOOL_DEFINITION = {
    "name": "multiplication_codim",
    "description": "Codimension of the image of the multiplication map H0(theta^s) x H0(theta^t) -> H0(theta^(s+t)) for a degree-n cover of P1 with theta = pi*O(r).",
    "inputSchema": {
        "type": "object",
        "properties": {
            "n": {"type": "integer", "description": "Degree of the cover (at least 2)"},
            "r": {"type": "integer", "description": "Twist r with theta = pi*O(r)"},
            "s": {"type": "integer", "description": "Level of the left factor (at least 1)"},
            "t": {"type": "integer", "description": "Level of the right factor (at least 1)"}
        },
        "required": ["n", "r", "s", "t"]
    }
}
