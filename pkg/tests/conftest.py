import random

import pytest

from skewpoly import (
    FiniteField,
    QuaternionRing,
    conventional_frame,
    frobenius_frame,
    from_terms,
    inner_frame,
    monomials_below,
)
from skewpoly.frames import QuatMap


@pytest.fixture(scope="session")
def gf2():
    return FiniteField(2)


@pytest.fixture(scope="session")
def gf3():
    return FiniteField(3)


@pytest.fixture(scope="session")
def gf4():
    return FiniteField(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return FiniteField(5)


@pytest.fixture(scope="session")
def gf7():
    return FiniteField(7)


@pytest.fixture(scope="session")
def gf9():
    return FiniteField(3, 2)


@pytest.fixture(scope="session")
def quat():
    return QuaternionRing()


@pytest.fixture(scope="session")
def conv_gf5_2(gf5):
    return conventional_frame(gf5, 2)


@pytest.fixture(scope="session")
def frob_gf4_2(gf4):
    return frobenius_frame(gf4, 2)


@pytest.fixture(scope="session")
def frob_gf9_2(gf9):
    return frobenius_frame(gf9, 2)


@pytest.fixture(scope="session")
def quat_inner_2(quat):
    """Two-variable quaternion frame: inner automorphisms + inner derivation."""
    s1 = QuatMap.inner_automorphism(quat, quat(1, 1, 0, 0))
    s2 = QuatMap.inner_automorphism(quat, quat.j())
    zero = QuatMap.zero(quat)
    sigma = [[s1, zero], [zero, s2]]
    beta = (quat.i(), quat(0, 0, 1, 1))
    return inner_frame(quat, sigma, beta)


def random_poly(frame, rng, max_deg=3, max_terms=4, height=2):
    """Random polynomial with at most max_terms terms of degree <= max_deg."""
    monos = monomials_below(frame.n, max_deg + 1)
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        if frame.ring.is_finite:
            c = frame.ring.random_element(rng)
        else:
            c = frame.ring.random_element(rng, height)
        pairs.append((rng.choice(monos), c))
    return from_terms(frame, pairs)


def random_nonzero_poly(frame, rng, max_deg=3, max_terms=4, height=2):
    while True:
        F = random_poly(frame, rng, max_deg, max_terms, height)
        if not F.is_zero():
            return F


def random_point(frame, rng, height=2):
    if frame.ring.is_finite:
        return tuple(frame.ring.random_element(rng) for _ in range(frame.n))
    return tuple(frame.ring.random_element(rng, height) for _ in range(frame.n))


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
