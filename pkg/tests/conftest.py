"""Shared exact-arithmetic test helpers: seeded random scalars and
admissible family parameter samplers."""
from __future__ import annotations

import random

import pytest

from pvi6 import QI, FamilySpec, GaussianRational, PVIParams, Rat


def rand_rat(rng: random.Random, lo=-6, hi=6, den=4):
    n = rng.randint(lo, hi)
    d = rng.randint(1, den)
    return Rat(n, d)


def rand_nonzero_rat(rng, lo=-6, hi=6, den=4):
    while True:
        r = rand_rat(rng, lo, hi, den)
        if r:
            return r


def rand_qi(rng: random.Random) -> GaussianRational:
    return GaussianRational(rand_rat(rng), rand_rat(rng))


def rand_nonzero_qi(rng) -> GaussianRational:
    while True:
        z = rand_qi(rng)
        if z:
            return z


def sample_family(rng: random.Random, name: str):
    """An admissible (FamilySpec, PVIParams) pair for the named family."""
    b, d = rand_qi(rng), rand_qi(rng)
    if name == "complicated-generic":
        while True:
            a, c = rand_nonzero_qi(rng), rand_nonzero_qi(rng)
            if a != c:
                return FamilySpec(name), PVIParams(a, b, c, d)
    if name == "complicated-equal":
        v = rand_nonzero_qi(rng)
        a = v * v * QI("1/2")
        return FamilySpec(name), PVIParams(a, b, a, d)
    if name == "exotic-generic" or name == "B0":
        while True:
            theta = rand_nonzero_rat(rng, -4, 4, 3)
            a, c = rand_qi(rng), rand_qi(rng)
            spec = FamilySpec(name, theta=theta)
            if name == "B0":
                A, _ = spec.AB(PVIParams(a, b, c, d))
                if a.is_zero() or A.is_zero():
                    continue
            return spec, PVIParams(a, b, c, d)
    if name in ("B1", "B2"):
        while True:
            s = rand_nonzero_rat(rng, -4, 4, 2)
            t = rand_nonzero_rat(rng, -4, 4, 2)
            if s * s == t * t:
                continue
            theta = (t - s) if name == "B1" else (t + s)
            if not theta:
                continue
            a = QI(-s * s / 2)
            c = QI(-t * t / 2)
            return FamilySpec(name, theta=theta), PVIParams(a, b, c, d)
    if name == "B6":
        theta = rand_nonzero_rat(rng, -4, 4, 2)
        a = QI(-theta * theta / 2)
        return FamilySpec(name, theta=theta), PVIParams(a, b, QI(0), d)
    if name == "B7":
        while True:
            theta = rand_nonzero_rat(rng, -4, 4, 2)
            c = rand_qi(rng)
            if not (QI(theta * theta) + 2 * c).is_zero():
                return FamilySpec(name, theta=theta), PVIParams(QI(0), b, c, d)
    raise ValueError(name)


@pytest.fixture
def rng():
    return random.Random(20260810)
