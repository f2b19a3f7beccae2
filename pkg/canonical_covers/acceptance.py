"""End-to-end acceptance checks, keyed by criterion ID."""

from __future__ import annotations

import json
import logging
import random
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .algebra.pushforward import cyclic_admissible, hilbert_fit, theta_splitting
from .config import get_fixture_path
from .engine.ring import beta_codim, generator_profile, hyperelliptic_profile, surface_canonical_profile
from .errors import CoverError
from .exact.matrix import RationalMatrix, cokernel_basis, image_codim, rank
from .models.algebra import GeneratorProfile, SplitBundle
from .models.report import CriterionResult, AcceptanceReport
from .models.surface import RuledSurface
from .models.threefold import CYCover
from .oracle.curves import CyclicTrigonalCurve, HyperellipticCurve, load_fixtures
from .oracle.verify import canonical_profile_bruteforce, oracle_mult_codim, oracle_pushforward_split
from .surfaces.catalog import parity_obstruction
from .surfaces.divisors import canonical_class, cohomology, euler_characteristic, h0, intersect
from .surfaces.towers import (
    hirzebruch_scroll_tower,
    quadric_cone_tower,
    quadric_scroll_tower,
    tower_canonical,
    tower_h0K,
    tower_pushforward,
    tower_regular,
    validate_canonical_cover,
)
from .threefolds.calabi_yau import alpha_beta_surjectivity, n0_equivalences, sectional_genus

logger = logging.getLogger(__name__)

SEED = 20240601


def expected_beta_codim(n: int, r: int, s: int, t: int) -> int | None:
    """Closed-form codimension of beta(s, t), where one is known."""
    s, t = max(s, t), min(s, t)
    if r == 1:
        closed = {(1, 1): n - 2, (2, 1): 0, (3, 1): 1, (2, 2): 1 if n == 2 else 0}
        if (s, t) in closed:
            return closed[(s, t)]
    else:
        closed = {(1, 1): r * (n - 2), (2, 1): r - 1}
        if (s, t) in closed:
            return closed[(s, t)]
    if t == 1:
        return 0
    return None


def stated_profile(n: int, r: int) -> GeneratorProfile:
    if (n, r) == (2, 1):
        return GeneratorProfile(counts={4: 1})
    return GeneratorProfile(counts={2: r * (n - 2), 3: r - 1})


def check_codim_grid() -> CriterionResult:
    mismatches = []
    checked = 0
    for r in range(1, 7):
        for n in range(2, 7):
            for s in range(1, 8):
                for t in range(1, 9 - s):
                    value = beta_codim(n, r, s, t)
                    if value != beta_codim(n, r, t, s):
                        mismatches.append({"n": n, "r": r, "s": s, "t": t, "asymmetric": True})
                    expected = expected_beta_codim(n, r, s, t)
                    if expected is None:
                        continue
                    checked += 1
                    if value != expected:
                        mismatches.append({"n": n, "r": r, "s": s, "t": t, "expected": expected, "actual": value})
    return CriterionResult(passed=not mismatches, expected={"closed_forms": checked}, actual={"mismatches": mismatches})


def check_oracle_equivalence() -> CriterionResult:
    curves = load_fixtures(get_fixture_path())
    selected = [
        c for c in curves
        if (isinstance(c, HyperellipticCurve) and c.genus in (3, 5, 7))
        or (isinstance(c, CyclicTrigonalCurve) and c.target_twist in (1, 2, 3))
    ]
    shapes = {(c.exponent, c.theta_twist) for c in selected}
    wanted = {(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)}
    mismatches = []
    for curve in selected:
        n, r = curve.exponent, curve.theta_twist
        split = oracle_pushforward_split(curve)
        if split != theta_splitting(n, r):
            mismatches.append({"curve": str(curve), "split": list(split.twists)})
        for s in range(1, 6):
            for t in range(1, min(s, 6 - s) + 1):
                oracle = oracle_mult_codim(curve, s, t)
                engine = beta_codim(n, r, s, t)
                if oracle != engine:
                    mismatches.append({"curve": str(curve), "s": s, "t": t, "oracle": oracle, "engine": engine})
    missing = sorted(wanted - shapes)
    return CriterionResult(
        passed=not mismatches and not missing,
        expected={"shapes": sorted(wanted)},
        actual={"curves": len(selected), "missing_shapes": missing, "mismatches": mismatches},
    )


def check_hyperelliptic_noether() -> CriterionResult:
    curves = [c for c in load_fixtures(get_fixture_path()) if isinstance(c, HyperellipticCurve) and c.genus <= 6]
    expected, actual = {}, {}
    for curve in curves:
        key = str(curve)
        expected[key] = str(hyperelliptic_profile(curve.genus))
        actual[key] = str(canonical_profile_bruteforce(curve))
    stated = {g: GeneratorProfile(counts={3: 1} if g == 2 else {2: g - 2}) for g in range(2, 7)}
    genera_ok = {c.genus for c in curves} == set(range(2, 7))
    closed_ok = all(hyperelliptic_profile(g) == p for g, p in stated.items())
    return CriterionResult(passed=expected == actual and genera_ok and closed_ok, expected=expected, actual=actual)


def check_generator_profiles() -> CriterionResult:
    mismatches = []
    for r in range(1, 7):
        for n in range(2, 7):
            computed = generator_profile(n, r)
            stated = stated_profile(n, r)
            if computed != stated or surface_canonical_profile(n, r) != stated:
                mismatches.append({"n": n, "r": r, "computed": str(computed), "stated": str(stated)})
    return CriterionResult(passed=not mismatches, expected="all profiles", actual={"mismatches": mismatches})


def check_cone_cover() -> CriterionResult:
    tower, hyperplane = quadric_cone_tower()
    y = tower.base
    expected = {
        "pushforward": [str(y.divisor(*ab)) for ab in ((0, 0), (-1, -3), (-2, -3), (-3, -6))],
        "canonical": str(y.divisor(1, 2)),
        "h0K": 4,
        "regular": True,
        "target_degree": 2,
        "image_is_cone": True,
    }
    report = validate_canonical_cover(tower, hyperplane)
    actual = {
        "pushforward": [str(d) for d in tower_pushforward(tower)],
        "canonical": str(tower_canonical(tower)),
        "h0K": tower_h0K(tower),
        "regular": tower_regular(tower),
        "target_degree": intersect(hyperplane, hyperplane),
        "image_is_cone": report.image_is_cone,
    }
    return CriterionResult(passed=expected == actual and report.passed, expected=expected, actual=actual)


def check_scroll_covers() -> CriterionResult:
    failures = []
    cases = 0
    families = [
        (f"quadric m={m} option={o} embedding={e}", lambda m=m, o=o, e=e: quadric_scroll_tower(m, o, e))
        for m in range(1, 5) for o in (1, 2) for e in ("f", "f'")
    ] + [
        (f"hirzebruch m={m} option={o}", lambda m=m, o=o: hirzebruch_scroll_tower(m, o))
        for m in range(2, 5) for o in (1, 2)
    ]
    for label, build in families:
        tower, hyperplane = build()
        report = validate_canonical_cover(tower, hyperplane)
        cases += 1
        if not report.passed or report.cover_degree != 4:
            failures.append({"case": label, "report": report.model_dump(mode="json")})
    return CriterionResult(passed=not failures, expected={"cases": cases}, actual={"failures": failures})


def check_obstructions() -> CriterionResult:
    cyclic_bad = [
        (n, r) for n in range(2, 11) for r in range(1, 6)
        if cyclic_admissible(n, r) != (n in (2, 3))
    ]
    hyperplane = RuledSurface.hirzebruch(1).divisor(1, 2)
    parity_bad = [n for n in range(2, 12) if parity_obstruction(hyperplane, n) != (n % 2 == 1)]
    return CriterionResult(
        passed=not cyclic_bad and not parity_bad,
        expected={"cyclic": [2, 3], "parity_rejects": [n for n in range(2, 12) if n % 2]},
        actual={"cyclic_mismatches": cyclic_bad, "parity_mismatches": parity_bad},
    )


def check_calabi_yau() -> CriterionResult:
    records = {n: n0_equivalences(CYCover(n=n)) for n in range(2, 9)}
    gamma = alpha_beta_surjectivity(CYCover(n=4))
    actual = {
        "values": {n: rec.n0_b2 for n, rec in records.items()},
        "all_equal": all(rec.all_equal for rec in records.values()),
        "sectional_genus_2": sectional_genus(CYCover(n=2)),
        "gamma_rank": gamma.gamma_rank,
        "gamma_columns": gamma.gamma_columns,
    }
    expected = {
        "values": {n: n != 2 for n in range(2, 9)},
        "all_equal": True,
        "sectional_genus_2": 3,
        "gamma_rank": 35,
        "gamma_columns": 100,
    }
    return CriterionResult(passed=expected == actual, expected=expected, actual=actual)


def _surface_identities() -> list[str]:
    failures = []
    surfaces = [RuledSurface.hirzebruch(e) for e in range(4)] + [RuledSurface.quadric()]
    for s in surfaces:
        k = canonical_class(s)
        for a in range(-6, 7):
            for b in range(-6, 7):
                d = s.divisor(a, b)
                h = cohomology(d)
                if min(h) < 0 or h[0] - h[1] + h[2] != euler_characteristic(d):
                    failures.append(f"Riemann-Roch {d} on {s.label}: {h}")
                if h[2] != h0(k - d) or h[1] != cohomology(k - d)[1]:
                    failures.append(f"Serre duality {d} on {s.label}")
    return failures


def _hilbert_round_trips(rng: random.Random) -> list[str]:
    failures = []
    window = range(-3, 12)
    for _ in range(200):
        bundle = SplitBundle(tuple(rng.randint(-10, 2) for _ in range(rng.randint(1, 6))))
        fitted = hilbert_fit(bundle.hilbert_function(window), rank=bundle.rank)
        if fitted != bundle:
            failures.append(f"hilbert_fit {bundle} -> {fitted}")
    return failures


def _matrix_invariants(rng: random.Random) -> list[str]:
    failures = []
    for _ in range(100):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        m = RationalMatrix.from_rows(
            [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
        )
        k = rank(m)
        if k != rank(m.transpose()) or k > min(rows, cols) or image_codim(m) + k != rows:
            failures.append(f"rank invariants on {m.to_json()}")
        functionals = cokernel_basis(m)
        if len(functionals) != image_codim(m) or any(
            sum(v[i] * m.entry(i, j) for i in range(rows)) != 0 for v in functionals for j in range(cols)
        ):
            failures.append(f"cokernel of {m.to_json()}")
    return failures


def check_properties() -> CriterionResult:
    rng = random.Random(SEED)
    failures = _surface_identities() + _hilbert_round_trips(rng) + _matrix_invariants(rng)
    return CriterionResult(passed=not failures, expected="no violations", actual={"failures": failures[:20]})


CRITERIA: dict[str, Callable[[], CriterionResult]] = {
    "1-codim-grid": check_codim_grid,
    "2-oracle-equivalence": check_oracle_equivalence,
    "3-hyperelliptic-noether": check_hyperelliptic_noether,
    "4-generator-profiles": check_generator_profiles,
    "5-cone-cover": check_cone_cover,
    "6-scroll-covers": check_scroll_covers,
    "7-obstructions": check_obstructions,
    "8-calabi-yau": check_calabi_yau,
    "9-properties": check_properties,
}


def run_acceptance(report_path: Path | None = None, only: list[str] | None = None) -> AcceptanceReport:
    """Run the acceptance criteria, optionally writing a JSON summary."""
    report = AcceptanceReport()
    for key, check in CRITERIA.items():
        if only and key not in only:
            continue
        logger.info("criterion %s: start", key)
        try:
            result = check()
        except CoverError as e:
            result = CriterionResult(passed=False, expected=None, actual=f"{type(e).__name__}: {e}")
        logger.info("criterion %s: %s", key, "pass" if result.passed else "FAIL")
        report.results[key] = result
    if report_path is not None:
        report_path.write_text(json.dumps(report.to_json(), ensure_ascii=False, indent=2))
    return report
