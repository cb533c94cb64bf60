from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from reeskernel.coefficients import Field, FieldError, field_arith, inverse_mod, is_prime

F7, F3, QQ = Field.gf(7), Field.gf(3), Field.qq()


def test_gf7_division_back_multiplies():
    q = field_arith(F7(3), F7(2), "div")
    assert q == F7(5)
    assert (q * F7(2)).value == 3


def test_rational_addition():
    assert field_arith(QQ(Fraction(1, 2)), QQ(Fraction(1, 3)), "add") == QQ(Fraction(5, 6))


def test_char3_collapse():
    assert field_arith(F3(2), F3(2), "mul") == F3(1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        field_arith(F7(1), F7(0), "div")
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)


def test_mixed_fields_rejected():
    with pytest.raises(FieldError):
        field_arith(F7(1), F3(1), "add")
    with pytest.raises(FieldError):
        F7(1) + QQ(1)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 2 ** 31 + 11, 2 ** 31 - 1 + 2])
def test_bad_moduli_rejected(p):
    with pytest.raises(FieldError):
        Field.gf(p)


def test_large_prime_below_bound_accepted():
    F = Field.gf(2 ** 31 - 1)
    assert F.mul(2 ** 30, 4) == 2


def test_is_prime_small_table():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@given(st.sampled_from([2, 3, 5, 7, 101, 65537]), st.integers(1, 10 ** 6))
def test_inverse_mod(p, a):
    if a % p:
        assert a * inverse_mod(a, p) % p == 1


FIELDS = [Field.gf(2), Field.gf(5), Field.gf(7), Field.qq()]
vals = st.one_of(st.integers(-50, 50),
                 st.fractions(min_value=-20, max_value=20, max_denominator=9))


def elem(F, v):
    if F.is_prime_field and isinstance(v, Fraction):
        v = v.numerator * inverse_mod(v.denominator % F.p, F.p) if v.denominator % F.p else 0
    return F(v)


@given(st.sampled_from(FIELDS), vals, vals, vals)
def test_field_axioms(F, a, b, c):
    a, b, c = elem(F, a), elem(F, b), elem(F, c)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F(0) and a * F(1) == a
    if a != F(0):
        assert a * (F(1) / a) == F(1)


@given(st.sampled_from([2, 3, 5, 7, 13]), st.integers(1, 1000))
def test_fermat(p, a):
    F = Field.gf(p)
    if a % p:
        x = F(a)
        acc = F(1)
        for _ in range(p - 1):
            acc = acc * x
        assert acc == F(1)


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rationals_stay_in_lowest_terms(a, b):
    for op in ("add", "sub", "mul"):
        v = field_arith(QQ(a), QQ(b), op).value
        assert isinstance(v, Fraction)
        assert v == Fraction(v.numerator, v.denominator)


def test_residues_are_canonical():
    assert F7(-1).value == 6
    assert F7(15).value == 1
