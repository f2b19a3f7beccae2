"""Command-line front-end."""

from __future__ import annotations

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from pydantic import ValidationError

from .acceptance import CRITERIA, run_acceptance
from .algebra.pushforward import theta_splitting
from .config import get_fixture_path, get_log_level
from .engine.ring import (
    beta_codim,
    generator_profile,
    hyperelliptic_profile,
    surface_canonical_profile,
    veronese_profile,
)
from .errors import CoverError
from .models.report import CommandRequest
from .models.surface import RuledSurface
from .models.threefold import CYCover
from .oracle.curves import load_fixtures
from .oracle.verify import canonical_profile_bruteforce, oracle_mult_codim, oracle_pushforward_split
from .surfaces.catalog import minimal_degree_catalog, parity_obstruction
from .surfaces.towers import tower_family, validate_canonical_cover
from .threefolds.calabi_yau import cy_pushforward, n0_equivalences

logger = logging.getLogger(__name__)

# (JSON payload, table text, success)
Outcome = tuple[Any, str, bool]


def _split_type(p: dict[str, Any]) -> Outcome:
    if p["ambient"] == "p3":
        bundle = cy_pushforward(CYCover(n=p["n"]))
    else:
        bundle = theta_splitting(p["n"], p["r"])
    return bundle.model_dump(mode="json"), str(bundle), True


def _beta(p: dict[str, Any]) -> Outcome:
    codim = beta_codim(p["n"], p["r"], p["s"], p["t"])
    return {"n": p["n"], "r": p["r"], "s": p["s"], "t": p["t"], "codim": codim}, f"codim {codim}", True


def _beta_grid(p: dict[str, Any]) -> Outcome:
    rows = [
        {"n": n, "r": r, "s": s, "t": t, "codim": beta_codim(n, r, s, t)}
        for r in range(1, p["r_max"] + 1)
        for n in range(2, p["n_max"] + 1)
        for s in range(1, p["level_max"])
        for t in range(1, min(s, p["level_max"] - s) + 1)
    ]
    lines = ["n  r  s  t  codim"] + [f"{x['n']:<2} {x['r']:<2} {x['s']:<2} {x['t']:<2} {x['codim']}" for x in rows]
    return rows, "\n".join(lines), True


def _gens(p: dict[str, Any]) -> Outcome:
    if p["surface"]:
        profile = surface_canonical_profile(p["n"], p["r"])
    elif p["veronese"]:
        profile = veronese_profile(p["n"], p["r"])
    else:
        profile = generator_profile(p["n"], p["r"])
    return profile.model_dump(mode="json"), str(profile), True


def _hyperelliptic(p: dict[str, Any]) -> Outcome:
    profile = hyperelliptic_profile(p["g"])
    return profile.model_dump(mode="json"), str(profile), True


def _oracle(p: dict[str, Any]) -> Outcome:
    path = Path(p["fixtures"]) if p["fixtures"] else get_fixture_path()
    results = []
    for curve in load_fixtures(path):
        entry: dict[str, Any] = {
            "curve": str(curve),
            "genus": curve.genus,
            "pushforward": list(oracle_pushforward_split(curve).twists),
            "canonical_profile": canonical_profile_bruteforce(curve).model_dump(mode="json"),
        }
        if curve.canonical_twist % 2 == 0:
            entry["codims"] = {
                f"{s},{t}": oracle_mult_codim(curve, s, t)
                for s in range(1, p["max_sum"])
                for t in range(1, min(s, p["max_sum"] - s) + 1)
            }
        results.append(entry)
    lines = []
    for entry in results:
        lines.append(f"{entry['curve']}  (g={entry['genus']})")
        lines.append(f"  pushforward  {entry['pushforward']}")
        profile = {int(k): v for k, v in entry["canonical_profile"].items() if v}
        lines.append(f"  canonical    {profile}")
        if "codims" in entry:
            lines.append("  theta codims " + ", ".join(f"({k}) {v}" for k, v in entry["codims"].items()))
    return results, "\n".join(lines), True


def _surface(p: dict[str, Any]) -> Outcome:
    tower, hyperplane = tower_family(p["family"], p["m"], p["option"], p["embedding"])
    report = validate_canonical_cover(tower, hyperplane)
    payload = report.model_dump(mode="json")
    lines = [f"{key:<18} {value}" for key, value in payload.items() if key != "assumptions"]
    lines += [f"assumption         {a}" for a in report.assumptions]
    lines.append(f"{'passed':<18} {report.passed}")
    return payload, "\n".join(lines), True


def _catalog(p: dict[str, Any]) -> Outcome:
    surfaces = minimal_degree_catalog(p["r"])
    return [s.model_dump(mode="json") for s in surfaces], "\n".join(s.label for s in surfaces), True


def _parity(p: dict[str, Any]) -> Outcome:
    if p["surface"] == "quadric":
        hyperplane = RuledSurface.quadric().divisor(1, p["m"])
    else:
        hyperplane = RuledSurface.hirzebruch(p["e"]).divisor(1, p["m"])
    obstructed = parity_obstruction(hyperplane, p["n"])
    text = f"degree {p['n']} over |{hyperplane}|: " + ("obstructed" if obstructed else "allowed")
    return {"hyperplane": str(hyperplane), "n": p["n"], "obstructed": obstructed}, text, True


def _cy3(p: dict[str, Any]) -> Outcome:
    star = None if p["star"] is None else p["star"] == "true"
    record = n0_equivalences(CYCover(n=p["n"], star_override=star))
    payload = record.model_dump(by_alias=True)
    return payload, "\n".join(f"{k:<22} {v}" for k, v in payload.items()), True


def _acceptance(p: dict[str, Any]) -> Outcome:
    report = run_acceptance(Path(p["report"]) if p["report"] else None, p["criterion"])
    lines = [f"{key:<22} {'pass' if r.passed else 'FAIL'}" for key, r in report.results.items()]
    return report.to_json(), "\n".join(lines), report.passed


def _serve(p: dict[str, Any]) -> Outcome:
    from .server import main as serve

    asyncio.run(serve())
    return None, "", True


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json"], default="table")
    common.add_argument("--verbose", action="store_true", help="log at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="canonical-covers",
        description="Canonical rings of covers of varieties of minimal degree",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[dict[str, Any]], Outcome], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    p = command("split-type", _split_type, "splitting type of the trace-zero module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--ambient", choices=["p1", "p3"], default="p1")

    p = command("beta", _beta, "codimension of R_s x R_t -> R_{s+t}")
    for flag in ("--n", "--r", "--s", "--t"):
        p.add_argument(flag, type=int, required=True)

    p = command("beta-grid", _beta_grid, "codimensions over a grid")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--r-max", type=int, default=6)
    p.add_argument("--level-max", type=int, default=8)

    p = command("gens", _gens, "generator profile of the theta ring")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--surface", action="store_true", help="canonical ring of the surface cover")
    kind.add_argument("--veronese", action="store_true", help="canonical ring of the curve (even degrees)")

    p = command("hyperelliptic", _hyperelliptic, "canonical ring of a hyperelliptic curve")
    p.add_argument("--g", type=int, required=True)

    p = command("oracle", _oracle, "brute-force checks on explicit curves")
    p.add_argument("--fixtures", default=None, help="fixture JSON (default: packaged fixtures)")
    p.add_argument("--max-sum", type=int, default=6)

    p = command("surface", _surface, "validate a quadruple canonical cover")
    p.add_argument("--family", choices=["quadric", "hirzebruch", "cone"], required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--option", type=int, choices=[1, 2], default=1)
    p.add_argument("--embedding", choices=["f", "f'"], default="f")

    p = command("catalog", _catalog, "surfaces of minimal degree")
    p.add_argument("--r", type=int, required=True)

    p = command("parity", _parity, "parity obstruction for covers of scrolls")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--surface", choices=["quadric", "hirzebruch"], default="hirzebruch")
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--m", type=int, default=2)

    p = command("cy3", _cy3, "Calabi-Yau threefold covers of P3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--star", choices=["true", "false"], default=None)

    p = command("paper-check", _acceptance, "run every acceptance criterion")
    p.add_argument("--report", default=None, help="write a JSON summary here")
    p.add_argument("--criterion", action="append", choices=sorted(CRITERIA), default=None)

    command("serve", _serve, "run the MCP server on stdio")
    return parser


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_log_level(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Sequence[str]) -> int:
    """Execute one command; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.verbose)

    params = {k: v for k, v in vars(args).items() if k not in ("command", "handler", "format", "verbose")}
    request = CommandRequest(command=args.command, params=params, format=args.format)
    logger.debug("dispatch %s", request)
    try:
        payload, text, ok = args.handler(request.params)
    except (CoverError, ValidationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if request.command != "serve":
        print(json.dumps(payload, ensure_ascii=False, indent=2) if request.format == "json" else text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
