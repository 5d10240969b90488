import pytest

from pvi6 import (
    QI,
    QI_ONE,
    AlgebraicNumber,
    DivisionByZero,
    IncompatibleExtensions,
    QuadraticExtension,
    quadratic_roots,
    scalar_arith,
)

from conftest import rand_qi


def ext_sqrt_minus_two():
    # w^2 = -2, i.e. w^2 + 0*w + 2 = 0
    return QuadraticExtension(QI(0), QI(2))


def test_product_in_extension():
    w = ext_sqrt_minus_two().root()
    assert (1 + w) * (1 - w) == QI(3)


def test_scalar_arith_dispatch():
    assert scalar_arith(QI(1, 2), QI(3, -1), "*") == QI(5, 5)
    assert scalar_arith(QI(1, 1), QI(1, 1), "/") == QI_ONE
    w = ext_sqrt_minus_two().root()
    assert scalar_arith(1 + w, 1 - w, "*") == QI(3)
    with pytest.raises(DivisionByZero):
        scalar_arith(QI(1), QI(0), "/")


def test_mixed_promotion():
    w = ext_sqrt_minus_two().root()
    v = QI(2, 1) * w + 3
    assert isinstance(v, AlgebraicNumber)
    assert v - 3 == QI(2, 1) * w


def test_incompatible_extensions():
    w1 = ext_sqrt_minus_two().root()
    w2 = QuadraticExtension(QI(0), QI(3)).root()  # w^2 = -3
    with pytest.raises(IncompatibleExtensions):
        _ = w1 + w2


def test_reducible_rejected():
    with pytest.raises(ValueError):
        QuadraticExtension(QI(0), QI(-4))  # w^2 = 4 splits


def test_inverse_round_trip(rng):
    ext = ext_sqrt_minus_two()
    for _ in range(40):
        v = AlgebraicNumber(rand_qi(rng), rand_qi(rng), ext)
        if v.is_zero():
            continue
        assert v * v.inverse() == AlgebraicNumber(QI(1), QI(0), ext)


def test_field_axioms_in_extension(rng):
    ext = QuadraticExtension(QI(1, 1), QI(2))  # some irreducible quadratic
    vals = [AlgebraicNumber(rand_qi(rng), rand_qi(rng), ext) for _ in range(12)]
    for x in vals[:4]:
        for y in vals[4:8]:
            for z in vals[8:]:
                assert (x * y) * z == x * (y * z)
                assert x * (y + z) == x * y + x * z


def test_quadratic_roots_split_and_extend():
    r1, r2 = quadratic_roots(QI(1), QI(0), QI(4))  # chi^2 + 4 = (chi-2i)(chi+2i)
    assert {r1, r2} == {QI(0, 2), QI(0, -2)}
    r1, r2 = quadratic_roots(QI(9), QI(2), QI(1))
    assert isinstance(r1, AlgebraicNumber)
    for r in (r1, r2):
        assert (9 * r * r + 2 * r + 1).is_zero()


def test_extension_sqrt():
    ext = ext_sqrt_minus_two()
    w = ext.root()
    v = (1 + w) * (1 + w)
    s = v.sqrt()
    assert s is not None and s * s == v
    # -2 has the square root w itself
    m2 = AlgebraicNumber(QI(-2), QI(0), ext)
    s = m2.sqrt()
    assert s is not None and s * s == m2


def test_demote():
    ext = ext_sqrt_minus_two()
    w = ext.root()
    v = (1 + w) * (1 - w)  # = 3, lands in the base field
    assert v == QI(3)
    assert v.in_base_field() and v.demote() == QI(3)
