"""calabi_yau_equivalences MCP tool implementation."""

from typing import Any

from pydantic import ValidationError

from ..errors import CoverError
from ..models.threefold import CYCover
from ..threefolds.calabi_yau import n0_equivalences


async def calabi_yau_equivalences(
    n: int,
    star_override: bool | None = None,
) -> dict[str, Any]:
    """Projective normality conditions for a Calabi-Yau threefold covering P3.

    Args:
        n: Degree of the morphism given by |B|
        star_override: Optionally force whether E_1 x E_1 -> E_{n-1} is an isomorphism

    Returns:
        The equivalence record or an error message
    """
    try:
        record = n0_equivalences(CYCover(n=n, star_override=star_override))
    except (CoverError, ValidationError) as e:
        return {"error": str(e)}

    return record.model_dump(by_alias=True)


TOOL_DEFINITION = {
    "name": "calabi_yau_equivalences",
    "description": "For a Calabi-Yau threefold X with an ample base-point-free B, h0(B) = 4, mapping with degree n onto P3: whether B^2 and B^3 satisfy N0, whether the curve section has genus above 3, and whether it is non-hyperelliptic.",
    "inputSchema": {
        "type": "object",
        "properties": {
            "n": {"type": "integer", "description": "Degree of the morphism (at least 2)"},
            "star_override": {
                "type": "boolean",
                "description": "Force the isomorphism condition on the pushforward algebra"
            }
        },
        "required": ["n"]
    }
}
