from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.errors import DivisionByZero, NoEmbedding, ParseError, SpecMismatch
from gradedpi.scalars import (
    Cyc,
    FieldSpec,
    Mod,
    Scalar,
    cyclotomic_polynomial,
    embed,
    sc_add,
    sc_inv,
    sc_mul,
)

Q = FieldSpec.rational()
Q3 = FieldSpec.cyclotomic(3)
Q4 = FieldSpec.cyclotomic(4)
Q12 = FieldSpec.cyclotomic(12)
F5 = FieldSpec.prime(5)


def S(field, text):
    return Scalar.parse(field, text)


def test_rational_sum():
    assert sc_add(Scalar.of(Q, Fraction(1, 2)), Scalar.of(Q, Fraction(1, 3))) == Scalar.of(Q, Fraction(5, 6))


def test_i_plus_i_cubed_is_zero():
    i = S(Q4, "z")
    assert sc_add(i, i ** 3) == Scalar.of(Q4, 0)
    assert not (i + i ** 3)


def test_prime_field_sum():
    assert sc_add(S(F5, "3"), S(F5, "4")) == S(F5, "2")


def test_i_squared():
    i = S(Q4, "z")
    assert sc_mul(i, i) == Scalar.of(Q4, -1)


def test_inverse_of_one_plus_zeta3():
    a = S(Q3, "1 + z")
    b = sc_inv(a)
    assert b == S(Q3, "-z")
    assert sc_mul(a, b) == Scalar.of(Q3, 1)


def test_inverse_of_two():
    assert sc_inv(Scalar.of(Q, 2)) == Scalar.of(Q, Fraction(1, 2))


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        sc_inv(Scalar.of(Q12, 0))
    with pytest.raises(ZeroDivisionError):
        sc_inv(Scalar.of(F5, 5))


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        sc_add(Scalar.of(Q, 1), Scalar.of(Q4, 1))


def test_canonical_fields():
    assert FieldSpec.cyclotomic(1) == Q
    assert FieldSpec.cyclotomic(2) == Q
    assert FieldSpec.cyclotomic(6) == Q3
    assert FieldSpec.parse("Q(z12)") == Q12
    assert FieldSpec.parse("GF(5)") == F5
    assert str(Q12) == "Q(z12)"
    with pytest.raises(ValueError):
        FieldSpec.prime(6)
    with pytest.raises(ParseError):
        FieldSpec.parse("R")


def test_zeta2_embeds_as_minus_one():
    z2 = FieldSpec.cyclotomic(2)  # canonicalised to Q, where z_2 = -1
    assert z2.zeta(1, 2) == -1
    assert embed(Scalar.of(z2, z2.zeta(1, 2)), Q4) == Scalar.of(Q4, -1)


def test_rational_embeds_unchanged():
    assert embed(Scalar.of(Q, Fraction(3, 7)), Q3) == Scalar.of(Q3, Fraction(3, 7))


def test_zeta3_into_q12():
    w = embed(S(Q3, "z"), Q12)
    assert w == Scalar(Q12, Q12.zeta(4))
    # minimal polynomial x^2 + x + 1 vanishes
    assert w * w + w + 1 == Scalar.of(Q12, 0)


def test_no_embedding():
    with pytest.raises(NoEmbedding):
        embed(Scalar.of(F5, 1), Q)
    with pytest.raises(NoEmbedding):
        embed(S(Q4, "z"), Q3)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_rational_collapse_and_format():
    x = S(Q12, "z^3") * S(Q12, "z^3")  # i^2
    assert x == Scalar.of(Q12, -1) and not isinstance(x.value, Cyc)
    assert str(S(Q12, "1/2 + 3 z^2")) == "1/2 + 3 z^2"
    assert str(S(F5, "7")) == "2"


def test_roots_of_unity():
    roots = Q12.roots_of_unity()
    assert len(roots) == 12 and len(set(roots)) == 12
    for r in roots:
        assert Scalar(Q12, r) ** 12 == Scalar.of(Q12, 1)
    assert sorted(Q.roots_of_unity()) == [-1, 1]


def test_mod_arithmetic():
    a = Mod(3, 7)
    assert a * a.inverse() == 1
    assert a + Fraction(1, 2) == Mod(3 + 4, 7)


# property tests --------------------------------------------------------

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def q12_elements(draw):
    return Scalar(Q12, Q12.from_coords([draw(coeff) for _ in range(Q12.degree)]))


@st.composite
def f7_elements(draw):
    return Scalar.of(FieldSpec.prime(7), draw(st.integers(0, 6)))


@settings(max_examples=60, deadline=None)
@given(q12_elements(), q12_elements(), q12_elements())
def test_field_axioms_q12(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a and a + b == b + a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * sc_inv(a) == Scalar.of(Q12, 1)


@settings(max_examples=40, deadline=None)
@given(f7_elements(), f7_elements(), f7_elements())
def test_field_axioms_f7(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * sc_inv(a) == Scalar.of(a.field, 1)


@settings(max_examples=40, deadline=None)
@given(q12_elements())
def test_canonical_form_idempotent(a):
    again = Q12.from_coords(Q12.coords(a.value))
    assert again == a.value
    assert Q12.parse_element(Q12.format(a.value)) == a.value


@st.composite
def q3_elements(draw):
    return Scalar(Q3, Q3.from_coords([draw(coeff) for _ in range(Q3.degree)]))


@settings(max_examples=40, deadline=None)
@given(q3_elements(), q3_elements())
def test_embed_is_ring_homomorphism(a, b):
    assert embed(a * b, Q12) == embed(a, Q12) * embed(b, Q12)
    assert embed(a + b, Q12) == embed(a, Q12) + embed(b, Q12)
    assert embed(Scalar.of(Q3, 1), Q12) == Scalar.of(Q12, 1)
