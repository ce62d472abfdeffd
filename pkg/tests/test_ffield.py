import pytest
from hypothesis import given, strategies as st

from edwards_law.errors import DivisionByZero, MixedFields, NotASquare
from edwards_law.ffield import FieldElement, PrimeField, is_prime

from frozen import SQRT_3_MOD_13, SQUARES_MOD_13
from oracles import is_square_bf, sqrt_bf

SMALL_PRIMES = [p for p in range(3, 102) if all(p % q for q in range(2, p))]
F13 = PrimeField(13)


def test_arithmetic_examples():
    F5 = PrimeField(5)
    assert F5(3) * F5(4) == 2
    assert F13(1) / F13(2) == 7
    assert F13(5) - F13(9) == 9
    assert -F13(1) == 12
    assert F13(2) ** -1 == 7
    assert F13(3) ** 0 == 1


@pytest.mark.parametrize("p", [13, 10007])
def test_multiplicative_identity(p):
    F = PrimeField(p)
    for a in range(0, p, max(1, p // 50)):
        assert F(a) * 1 == F(a)


def test_is_square_examples():
    for p in (3, 5, 13, 10007):
        assert PrimeField(p)(0).is_square()
    assert not F13(2).is_square()
    assert F13(4).is_square()


def test_squares_match_frozen_oracle():
    assert tuple(a for a in range(13) if F13(a).is_square()) == SQUARES_MOD_13


def test_sqrt_examples():
    assert F13(4).sqrt() == 2
    assert F13(0).sqrt() == 0
    assert F13(3).sqrt() == SQRT_3_MOD_13 == sqrt_bf(3, 13)


def test_sqrt_of_nonsquare_raises():
    with pytest.raises(NotASquare):
        F13(2).sqrt()


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_exhaustive_small_fields(p):
    F = PrimeField(p)
    for a in range(p):
        x = F(a)
        assert x.is_square() == is_square_bf(a, p)
        if a:
            assert x * (1 / x) == 1
        if x.is_square():
            r = x.sqrt()
            assert r * r == x
            assert int(r) == sqrt_bf(a, p)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFields):
        F13(1) + PrimeField(17)(1)
    with pytest.raises(MixedFields):
        F13(1) * PrimeField(17)(1)
    assert F13(1) != PrimeField(17)(1)


def test_division_by_zero_is_an_error():
    with pytest.raises(DivisionByZero):
        F13(3) / F13(0)
    with pytest.raises(DivisionByZero):
        F13(0).inverse()


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 91, 561])
def test_modulus_validation(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_primality_agrees_with_trial_division():
    for n in range(2000):
        assert is_prime(n) == (n > 1 and all(n % q for q in range(2, int(n**0.5) + 1)))
    assert is_prime(2**61 - 1)
    assert not is_prime((2**31 - 1) * (2**19 - 1))


def test_elements_are_immutable():
    x = F13(3)
    with pytest.raises(AttributeError):
        x.value = 4
    assert isinstance(x, FieldElement)
    assert hash(x) == hash(F13(16))


def test_nonsquare_helper():
    for p in SMALL_PRIMES:
        assert not PrimeField(p).nonsquare().is_square()


P_BIG = 10007
elems = st.integers(min_value=-10**6, max_value=10**6)


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    F = PrimeField(P_BIG)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0
    if y:
        assert (x / y) * y == x


@given(elems)
def test_sqrt_roundtrip(a):
    x = PrimeField(P_BIG)(a)
    sq = x * x
    r = sq.sqrt()
    assert r * r == sq
    assert int(r) <= int(-r)
