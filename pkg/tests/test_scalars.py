"""Exact scalar layer: cyclotomic polynomials, field laws, serialization.

Expected cyclotomic polynomials below were derived by hand from the product
formula (x^n - 1 factors as the product of Phi_d over d | n) and frozen:

    Phi_1 = x - 1
    Phi_2 = x + 1
    Phi_3 = x^2 + x + 1
    Phi_4 = x^2 + 1            (divide x^4-1 by (x-1)(x+1))
    Phi_6 = x^2 - x + 1        (divide x^6-1 by (x-1)(x+1)(x^2+x+1))
    Phi_12 = x^4 - x^2 + 1
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.errors import DivisionByZeroError, FieldMismatchError, ParseError
from hopfcyclic.exactmath.scalars import (
    Scalar,
    cyclotomic_field,
    cyclotomic_polynomial,
    make_field,
    poly_divmod,
    poly_mul,
    rationals,
    totient,
)

QQ = rationals()


def F(*coeffs):
    return [Fraction(c) for c in coeffs]


FROZEN_PHI = {
    1: F(-1, 1),
    2: F(1, 1),
    3: F(1, 1, 1),
    4: F(1, 0, 1),
    6: F(1, -1, 1),
    12: F(1, 0, -1, 0, 1),
}


@pytest.mark.parametrize("n", sorted(FROZEN_PHI))
def test_cyclotomic_polynomial_frozen_values(n):
    assert cyclotomic_polynomial(n) == FROZEN_PHI[n]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 10, 12])
def test_cyclotomic_product_recovers_x_n_minus_1(n):
    # independent identity: prod over d | n of Phi_d == x^n - 1
    prod = F(1)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = poly_mul(prod, cyclotomic_polynomial(d))
    expected = [Fraction(0)] * (n + 1)
    expected[0], expected[n] = Fraction(-1), Fraction(1)
    assert prod == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12])
def test_cyclotomic_degree_is_totient(n):
    assert len(cyclotomic_polynomial(n)) - 1 == totient(n)


def test_poly_divmod_roundtrip():
    p = F(2, 0, -3, 1, 4)
    q = F(1, 1, 1)
    quo, rem = poly_divmod(p, q)
    back = poly_mul(quo, q)
    m = max(len(back), len(rem), len(p))
    pad = lambda xs: xs + [Fraction(0)] * (m - len(xs))
    assert [a + b for a, b in zip(pad(back), pad(rem))] == pad(list(p))


def test_zeta4_squares_to_minus_one():
    k = cyclotomic_field(4)
    z = k.gen
    assert k.mul(z, z) == k.from_int(-1)
    assert k.zeta_power(4) == k.one


def test_zeta6_satisfies_phi6():
    k = cyclotomic_field(6)
    z = k.gen
    # z^2 - z + 1 = 0
    assert k.is_zero(k.add(k.sub(k.mul(z, z), z), k.one))


def test_zeta3_cube_is_one_and_inverse():
    k = cyclotomic_field(3)
    z = k.gen
    assert k.zeta_power(3) == k.one
    assert k.mul(z, k.inv(z)) == k.one
    assert k.inv(z) == k.zeta_power(2)


def test_roots_of_unity_groups():
    assert QQ.roots_of_unity() == [Fraction(1), Fraction(-1)]
    k4 = cyclotomic_field(4)
    assert len(k4.roots_of_unity()) == 4
    k3 = cyclotomic_field(3)
    # odd n: -zeta_3 generates a group of order 6
    assert len(k3.roots_of_unity()) == 6
    for u in k3.roots_of_unity():
        assert k3.zeta_power(0) == k3.one
        acc = k3.one
        for _ in range(6):
            acc = k3.mul(acc, u)
        assert acc == k3.one


rational_values = st.fractions(
    min_value=-(10**6), max_value=10**6, max_denominator=10**4
)


@st.composite
def cyclotomic_values(draw, field):
    return tuple(
        draw(st.fractions(min_value=-100, max_value=100, max_denominator=20))
        for _ in range(field.degree)
    )


@given(a=rational_values, b=rational_values, c=rational_values)
def test_rational_field_laws(a, b, c):
    assert QQ.add(a, QQ.add(b, c)) == QQ.add(QQ.add(a, b), c)
    assert QQ.mul(a, QQ.mul(b, c)) == QQ.mul(QQ.mul(a, b), c)
    assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
    assert QQ.add(a, QQ.neg(a)) == QQ.zero
    if a != 0:
        assert QQ.mul(a, QQ.inv(a)) == QQ.one


@settings(max_examples=60)
@given(data=st.data())
@pytest.mark.parametrize("n", [3, 4, 6])
def test_cyclotomic_field_laws(n, data):
    k = cyclotomic_field(n)
    a = data.draw(cyclotomic_values(k))
    b = data.draw(cyclotomic_values(k))
    c = data.draw(cyclotomic_values(k))
    assert k.add(a, k.add(b, c)) == k.add(k.add(a, b), c)
    assert k.mul(a, k.mul(b, c)) == k.mul(k.mul(a, b), c)
    assert k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c))
    assert k.mul(a, b) == k.mul(b, a)
    assert k.add(a, k.neg(a)) == k.zero
    if not k.is_zero(a):
        assert k.mul(a, k.inv(a)) == k.one


def test_serialization_roundtrip_rational():
    for text in ["0", "5", "-7", "2/3", "-11/4"]:
        v = QQ.parse(text)
        assert QQ.serialize(v) == text


def test_serialization_roundtrip_cyclotomic():
    k = cyclotomic_field(4)
    v = k.parse(["1/2", "-3"])
    assert k.serialize(v) == ["1/2", "-3"]
    # plain rational strings embed as constants
    assert k.parse("7") == k.from_int(7)


def test_parse_errors():
    with pytest.raises(ParseError):
        QQ.parse("3/0")
    with pytest.raises(ParseError):
        QQ.parse("abc")
    with pytest.raises(ParseError):
        cyclotomic_field(4).parse(["1"])  # wrong length
    with pytest.raises(ParseError):
        make_field("cyclotomic:x")


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        QQ.inv(Fraction(0))
    k = cyclotomic_field(3)
    with pytest.raises(DivisionByZeroError):
        k.inv(k.zero)


def test_scalar_wrapper_field_mismatch():
    a = Scalar(QQ, "1/2")
    b = Scalar(cyclotomic_field(4), "1/2")
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * b
    assert (a + a).serialize() == "1"
    assert (b * b).serialize() == ["1/4", "0"]


def test_make_field_specs():
    assert make_field("Q") == QQ
    assert make_field({"cyclotomic": 6}) == cyclotomic_field(6)
    assert make_field("cyclotomic:6") == cyclotomic_field(6)
    assert make_field("Q") != make_field("cyclotomic:4")


def test_degenerate_cyclotomic_orders():
    # Phi_1 = x - 1 and Phi_2 = x + 1 give 1-dimensional fields
    k1 = cyclotomic_field(1)
    assert k1.gen == (Fraction(1),)
    k2 = cyclotomic_field(2)
    assert k2.gen == (Fraction(-1),)
    assert k2.mul(k2.gen, k2.gen) == k2.one
