"""generator_profile MCP tool implementation."""

from typing import Any

from ..engine import ring
from ..errors import CoverError


async def generator_profile(
    kind: str = "curve",
    n: int | None = None,
    r: int | None = None,
    g: int | None = None,
) -> dict[str, Any]:
    """Minimal generator counts of a canonical or theta ring, by degree.

    Args:
        kind: "curve" (ring of theta), "surface" (canonical ring of the surface cover)
            or "hyperelliptic" (canonical ring of a genus-g hyperelliptic curve)
        n: Degree of the cover
        r: Twist with theta = pi*O(r)
        g: Genus, for kind "hyperelliptic"

    Returns:
        Dict with the profile or an error message
    """
    try:
        if kind == "hyperelliptic":
            if g is None:
                return {"error": "Parameter g is required for hyperelliptic profiles"}
            profile = ring.hyperelliptic_profile(g)
        elif kind in ("curve", "surface"):
            if n is None or r is None:
                return {"error": f"Parameters n and r are required for {kind} profiles"}
            if kind == "surface":
                profile = ring.surface_canonical_profile(n, r)
            else:
                profile = ring.generator_profile(n, r)
        else:
            return {"error": f"Unknown profile kind: {kind}"}
    except CoverError as e:
        return {"error": str(e)}

    return {
        "kind": kind,
        "profile": profile.model_dump(mode="json"),
        "summary": str(profile),
    }


TOOL_DEFINITION = {
    "name": "generator_profile",
    "description": "Number of minimal generators in each degree (beyond 1) of the ring of theta, of the canonical ring of a quadruple or general canonical cover of a minimal-degree surface, or of the canonical ring of a hyperelliptic curve.",
    "inputSchema": {
        "type": "object",
        "properties": {
            "kind": {
                "type": "string",
                "enum": ["curve", "surface", "hyperelliptic"],
                "description": "Which ring to describe (default curve)",
                "default": "curve"
            },
            "n": {"type": "integer", "description": "Degree of the cover"},
            "r": {"type": "integer", "description": "Degree of the minimal-degree target, theta = pi*O(r)"},
            "g": {"type": "integer", "description": "Genus, for hyperelliptic curves"}
        },
        "required": []
    }
}
