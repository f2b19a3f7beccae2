"""Explicit cyclic covers y^n = f(x) of the projective line."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Sequence

import sympy
from pydantic import TypeAdapter, ValidationError
from sympy import QQ, Poly

from ..errors import DomainError
from ..exact.matrix import to_rational
from ..models.curve import CurveFixture, Grading

logger = logging.getLogger(__name__)

X = sympy.Symbol("x")


def polynomial(coefficients: Sequence[int | str | Fraction]) -> Poly:
    """Univariate polynomial over QQ from coefficients listed low to high."""
    values = [to_rational(c) for c in coefficients]
    return Poly([sympy.Rational(q.numerator, q.denominator) for q in reversed(values)], X, domain=QQ)


@dataclass(frozen=True)
class SuperellipticCurve:
    """Smooth projective model of y^n = f(x), f squarefree with n | deg f.

    Over infinity the cover is unramified and y has a pole of order
    w = deg f / n, so H0(pi*O(D)) has basis x^i y^j with i + j w <= D.
    """

    f: Poly
    exponent: int

    def __post_init__(self):
        if self.exponent not in (2, 3):
            raise DomainError(f"only double and triple cyclic covers are modelled, got n={self.exponent}")
        degree = self.f.degree()
        if degree <= 0 or degree % self.exponent:
            raise DomainError(f"deg f = {degree} must be a positive multiple of {self.exponent}")
        if self.f.gcd(self.f.diff(X)).degree() > 0:
            raise DomainError(f"f = {self.f.as_expr()} is not squarefree")

    @property
    def weight(self) -> int:
        """Pole order of y over infinity."""
        return self.f.degree() // self.exponent

    @cached_property
    def frame_orders(self) -> tuple[int, int]:
        """Orders of dx / y^(n-1) at a branch point and at a point over infinity.

        Over a root of f of multiplicity m the fibre is one point with x - a of
        order n, dx of order n - 1 and y of order m. Over infinity t = 1/x is a
        local parameter, dx has order -2 and y has order -w.
        """
        n = self.exponent
        _, factors = self.f.sqf_list()
        m = max(k for _, k in factors)
        return (n - 1) - (n - 1) * m, (n - 1) * self.weight - 2

    @property
    def canonical_twist(self) -> int:
        """K_C = pi*O(canonical_twist), read off the divisor of dx / y^(n-1)."""
        branch, infinity = self.frame_orders
        if branch:
            raise DomainError(f"dx / y^{self.exponent - 1} has order {branch} at the branch points")
        return infinity

    @property
    def genus(self) -> int:
        return self.exponent * self.canonical_twist // 2 + 1

    @property
    def theta_twist(self) -> int:
        """r with K_C = pi*O(2r)."""
        if self.canonical_twist % 2:
            raise DomainError(f"no theta grading: K_C = pi*O({self.canonical_twist})")
        return self.canonical_twist // 2

    @cached_property
    def coefficients(self) -> dict[int, Fraction]:
        return {
            monom[0]: Fraction(int(c.p), int(c.q)) for monom, c in self.f.terms()
        }

    def grading_twist(self, grading: Grading) -> int:
        return self.theta_twist if grading == "theta" else self.canonical_twist

    def __str__(self) -> str:
        return f"y^{self.exponent} = {self.f.as_expr()}"


class HyperellipticCurve(SuperellipticCurve):
    """y^2 = f(x) with deg f = 2g + 2."""

    def __init__(self, f: Poly):
        super().__init__(f=f, exponent=2)
        if self.genus < 2:
            raise DomainError(f"genus must be at least 2, got {self.genus}")


class CyclicTrigonalCurve(SuperellipticCurve):
    """y^3 = f(x) with deg f = 3r + 3; theta = pi*O(r) and g = 3r + 1."""

    def __init__(self, f: Poly):
        super().__init__(f=f, exponent=3)
        if self.target_twist < 1:
            raise DomainError("need deg f >= 6")

    @property
    def target_twist(self) -> int:
        return self.weight - 1


def curve_from_fixture(fixture: CurveFixture) -> SuperellipticCurve:
    try:
        f = polynomial(fixture.f)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"bad coefficient in {fixture.name or fixture.f}: {e}") from e
    if fixture.kind == "hyperelliptic":
        curve: SuperellipticCurve = HyperellipticCurve(f)
    else:
        curve = CyclicTrigonalCurve(f)
    if fixture.r is not None and fixture.r != curve.theta_twist:
        raise DomainError(f"{curve}: stated r={fixture.r}, curve has r={curve.theta_twist}")
    return curve


def load_fixtures(path: Path) -> list[SuperellipticCurve]:
    """Read fixture curves from a JSON list."""
    try:
        fixtures = TypeAdapter(list[CurveFixture]).validate_python(json.loads(path.read_text()))
        curves = [curve_from_fixture(f) for f in fixtures]
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        raise DomainError(f"cannot read fixtures from {path}: {e}") from e
    logger.debug("loaded %d fixture curves from %s", len(curves), path)
    return curves
