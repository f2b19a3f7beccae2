"""Shared fixtures."""

import json

import pytest

from canonical_covers.oracle.curves import CyclicTrigonalCurve, HyperellipticCurve, polynomial


def binomial_curve(kind, degree, family="minus"):
    """y^n = x^d - 1 or y^n = x^d + x + 1."""
    coefficients = [0] * (degree + 1)
    coefficients[degree] = 1
    if family == "minus":
        coefficients[0] = -1
    else:
        coefficients[0] = coefficients[1] = 1
    cls = HyperellipticCurve if kind == "hyperelliptic" else CyclicTrigonalCurve
    return cls(polynomial(coefficients))


@pytest.fixture
def genus3_curve():
    """y^2 = x^8 - 1."""
    return binomial_curve("hyperelliptic", 8)


@pytest.fixture
def genus2_curve():
    """y^2 = x^6 - 1."""
    return binomial_curve("hyperelliptic", 6)


@pytest.fixture
def trigonal_r1():
    """y^3 = x^6 - 1."""
    return binomial_curve("trigonal", 6)


@pytest.fixture
def trigonal_r2():
    """y^3 = x^9 + x + 1."""
    return binomial_curve("trigonal", 9, "plus")


@pytest.fixture
def fixture_file(tmp_path):
    """A small fixture file with one curve of each kind."""
    path = tmp_path / "fixtures.json"
    path.write_text(json.dumps([
        {"kind": "hyperelliptic", "f": ["-1", "0", "0", "0", "0", "0", "0", "0", "1"], "r": 1},
        {"kind": "trigonal", "f": ["1", "1", "0", "0", "0", "0", "1"], "r": 1},
    ]))
    return path
