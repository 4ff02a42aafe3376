"""Half-integer and symbolic-scalar arithmetic."""

import random
from fractions import Fraction
from math import pi

import pytest

from howedual import HalfInt, SymScalar, factorial, rising, sym_abs, sym_mul


def test_factorial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    # the product prod_{j=1}^{2} j! sits in the vol(U_3) denominator
    assert factorial(1) * factorial(2) == 2


def test_rising_basics():
    assert rising(7, 0) == 1
    assert rising(-2, 1) == -2
    assert rising(3, 3) == 60


def test_rising_matches_factorial_quotient():
    for a in range(1, 12):
        for k in range(0, 8):
            assert rising(a, k) == factorial(a + k - 1) // factorial(a - 1)


def test_halfint_parse_and_str():
    assert HalfInt.parse("3/2") == HalfInt(3)
    assert HalfInt.parse("1.5") == HalfInt(3)
    assert HalfInt.parse("-5/2") == HalfInt(-5)
    assert HalfInt.parse("2") == HalfInt(4)
    assert str(HalfInt(3)) == "3/2"
    assert str(HalfInt(4)) == "2"
    assert str(HalfInt(-4)) == "-2"
    with pytest.raises(ValueError):
        HalfInt.parse("1/3")


def test_halfint_arithmetic():
    a = HalfInt.parse("3/2")
    b = HalfInt.parse("1/2")
    assert a + b == HalfInt.from_int(2)
    assert a - b == HalfInt.from_int(1)
    assert (a + 1) == HalfInt(5)
    assert -a == HalfInt(-3)
    assert a > b
    assert a.as_fraction() == Fraction(3, 2)
    assert not a.is_integer()
    assert (a + b).to_int() == 2
    with pytest.raises(ValueError):
        a.to_int()


def test_symscalar_canonical_form():
    # 8 pi^3 stores as rat 1, sqrt2_pow 6, pi_pow 3
    s = SymScalar(Fraction(8), 0, 3)
    assert (s.rat, s.sqrt2_pow, s.pi_pow, s.i_pow) == (Fraction(1), 6, 3, 0)
    # i^2 folds into the sign, i^3 reduces to i with a sign
    assert SymScalar(Fraction(1), 0, 0, 2) == SymScalar(Fraction(-1))
    assert SymScalar(Fraction(1), 0, 0, 3) == SymScalar(Fraction(-1), 0, 0, 1)
    # zero is unique
    assert SymScalar(Fraction(0), 5, 2, 3) == SymScalar.zero()


def test_symscalar_products():
    sqrt2 = SymScalar(Fraction(1), 1)
    assert sym_mul(sqrt2, sqrt2) == SymScalar(Fraction(2))
    # modulus drops i and the sign
    s = SymScalar(Fraction(1), 1, 1, 3)  # i^3 * 2^(1/2) * pi
    assert sym_abs(s) == SymScalar(Fraction(1), 1, 1, 0)
    # vol(U_2) = 8 pi^3
    vol_u2 = SymScalar(Fraction(1), 6, 3)
    assert vol_u2.to_float() == pytest.approx(8 * pi**3)


def test_symscalar_division_and_powers():
    x = SymScalar(Fraction(3, 5), 7, 2, 1)
    assert x / x == SymScalar.one()
    assert x * x**-1 == SymScalar.one()
    assert (x**3) / (x**2) == x
    with pytest.raises(ZeroDivisionError):
        x / SymScalar.zero()


def test_symscalar_json_round_trip():
    x = SymScalar(Fraction(-3, 5), 7, -2, 1)
    data = x.to_json()
    assert data == {"rat": "-3/5", "sqrt2_pow": 7, "pi_pow": -2, "i_pow": 1}
    assert SymScalar.from_json(data) == x


def test_symscalar_complex_value():
    x = SymScalar(Fraction(1), 2, 0, 1)  # 2i
    assert x.to_complex() == pytest.approx(2j)
    with pytest.raises(ValueError):
        x.to_float()


def _random_fraction(rng):
    return Fraction(rng.randint(-30, 30), rng.randint(1, 12))


def _random_scalar(rng):
    num = rng.randint(-20, 20)
    if num == 0:
        num = 1
    return SymScalar(
        Fraction(num, rng.randint(1, 9)),
        rng.randint(-6, 6),
        rng.randint(-3, 3),
        rng.randint(0, 3),
    )


def test_rational_ring_axioms_randomized():
    rng = random.Random(20240817)
    for _ in range(1000):
        a, b, c = (_random_fraction(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_symscalar_multiplicative_axioms_randomized():
    rng = random.Random(11)
    one = SymScalar.one()
    for _ in range(1000):
        x, y, z = (_random_scalar(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * one == x
        assert sym_abs(x * y) == sym_mul(sym_abs(x), sym_abs(y))
        # numeric consistency of the exact product
        assert (x * y).to_complex() == pytest.approx(x.to_complex() * y.to_complex())
