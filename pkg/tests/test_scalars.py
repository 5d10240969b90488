import random

import pytest

from pvi6 import QI, QI_I, QI_ONE, DivisionByZero, GaussianRational, Rat
from pvi6.scalars import rat_sqrt

from conftest import rand_qi, rand_nonzero_qi


def test_basic_products():
    assert QI(1, 2) * QI(3, -1) == QI(5, 5)
    assert QI(1, 1) / QI(1, 1) == QI_ONE
    assert QI_I * QI_I == QI(-1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        QI(1) / QI(0)


def test_field_axioms_random(rng):
    for _ in range(200):
        x, y, z = rand_qi(rng), rand_qi(rng), rand_qi(rng)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + (-x) == QI(0)
        if y:
            assert y * (QI_ONE / y) == QI_ONE


def test_norm_and_conjugate(rng):
    for _ in range(50):
        z = rand_qi(rng)
        assert (z * z.conjugate()).re == z.norm()
        assert (z * z.conjugate()).im == Rat(0)


def test_rat_sqrt():
    assert rat_sqrt(Rat(9, 4)) == Rat(3, 2)
    assert rat_sqrt(Rat(2)) is None
    assert rat_sqrt(Rat(-1)) is None


def test_gaussian_sqrt():
    assert QI(-4).sqrt() == QI(0, 2)
    assert QI(0, 2).sqrt() == QI(1, 1)
    assert QI(3, 4).sqrt() == QI(2, 1)
    assert QI(2).sqrt() is None
    assert QI(1, 1).sqrt() is None


def test_sqrt_round_trip(rng):
    for _ in range(60):
        z = rand_qi(rng)
        sq = z * z
        r = sq.sqrt()
        assert r is not None and r * r == sq


def test_parse_format_round_trip(rng):
    for _ in range(60):
        z = rand_qi(rng)
        assert GaussianRational.from_string(str(z)) == z
    assert GaussianRational.from_string("3/4-1/2*i") == QI("3/4", "-1/2")
    assert GaussianRational.from_string("i") == QI_I
    assert GaussianRational.from_string("-7") == QI(-7)
    with pytest.raises(ValueError):
        GaussianRational.from_string("x+y")


def test_int_coercion():
    assert 2 * QI(1, 1) == QI(2, 2)
    assert QI(3) - 1 == QI(2)
    assert 1 - QI(3) == QI(-2)
    assert (QI(1, 1) ** 4) == QI(-4)
