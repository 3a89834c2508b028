"""Shared fixtures and independent integer oracles.

The oracle functions here do textbook affine arithmetic on Python ints
(per-step modular inversion via pow, no Montgomery form, no projective
coordinates) so the library is always checked against a disjoint path.
"""

from __future__ import annotations

import random

import pytest

from montecc import _backend
from montecc.params import CurveParams, registry_get


@pytest.fixture(scope="session")
def toy17():
    return registry_get("toy-e17")


@pytest.fixture(scope="session")
def toy23():
    return registry_get("toy-e23")


@pytest.fixture(scope="session")
def secp160r1():
    return registry_get("secp160r1")


@pytest.fixture(scope="session")
def cofactor2_curve():
    # y^2 = x^3 + 2x over GF(13): 10 points, G = (1,4) of order 5, h = 2.
    # Not registered; used to exercise order checks and y = 0 doubling.
    return CurveParams("toy-h2", p=13, a=2, b=0, gx=1, gy=4, n=5, h=2)


@pytest.fixture(params=_backend.available_backends())
def each_backend(request):
    """Run the test once per kernel backend (pure Python and compiled)."""
    previous = _backend.get_backend()
    _backend.set_backend(request.param)
    yield request.param
    _backend.set_backend(previous)


@pytest.fixture
def rng():
    return random.Random(0xDECAF)


# -- integer oracles -----------------------------------------------------------


def oracle_points(p: int, a: int, b: int) -> list[tuple[int, int]]:
    """All finite points of y^2 = x^3 + ax + b over GF(p), brute force."""
    pts = []
    for x in range(p):
        rhs = (x * x * x + a * x + b) % p
        for y in range(p):
            if y * y % p == rhs:
                pts.append((x, y))
    return pts


def oracle_add(P, Q, p: int, a: int):
    """Affine chord/tangent addition on int pairs; None is infinity."""
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def oracle_mul(k: int, P, p: int, a: int):
    """k*P by literal repeated addition; only for tiny k."""
    acc = None
    for _ in range(k):
        acc = oracle_add(acc, P, p, a)
    return acc


def to_affine_ints(point):
    """AffinePoint -> int pair or None, for comparing against oracles."""
    return point.to_ints()


def from_ints(curve, pt):
    """Int pair (or None) -> AffinePoint on the given curve."""
    from montecc import AffinePoint

    if pt is None:
        return AffinePoint.at_infinity()
    return curve.point_from_ints(*pt)
