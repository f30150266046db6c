"""Exact scalar layer: rationals, parameter polynomials, rational functions."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenstir import (
    BothZero,
    DivisionByZero,
    FieldElem,
    LambdaPoly,
    ModeMismatch,
    PoleAtLambda,
    const,
    field_arith,
    instantiate,
    lam_elem,
    poly_gcd,
)
from oracles import poly_divmod

LAM = lam_elem()

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
polys = st.lists(rationals, max_size=4).map(LambdaPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero)
elems = st.tuples(polys, nonzero_polys).map(lambda nd: FieldElem.from_polys(*nd))


def test_rational_addition():
    assert const(F(1, 2)) + const(F(1, 3)) == F(5, 6)


def test_inverse_cancellation():
    assert (1 - LAM) * (1 / (1 - LAM)) == 1


def test_polynomial_quotient_reduces():
    # oracle: long division of 1 - l^2 by 1 - l
    quot, rem = poly_divmod([1, 0, -1], [1, -1])
    assert rem == [] and quot == [1, 1]
    e = FieldElem.from_polys(LambdaPoly((1, 0, -1)), LambdaPoly((1, -1)))
    assert e == 1 + LAM


def test_field_arith_dispatch():
    a, b = const(F(3, 4)), const(F(1, 4))
    assert field_arith(a, b, "add") == 1
    assert field_arith(a, b, "sub") == F(1, 2)
    assert field_arith(a, b, "mul") == F(3, 16)
    assert field_arith(a, b, "div") == 3
    with pytest.raises(ValueError):
        field_arith(a, b, "pow")


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        const(1) / const(0)
    with pytest.raises(DivisionByZero):
        const(0).inverse()


def test_mode_mismatch():
    sym = const(1)
    inst = const(1, F(1, 2))
    with pytest.raises(ModeMismatch):
        sym + inst
    with pytest.raises(ModeMismatch):
        const(1, F(1, 2)) * const(1, F(1, 3))


def test_gcd_examples():
    g = poly_gcd(LambdaPoly((-1, 0, 1)), LambdaPoly((-1, 1)))
    assert g == LambdaPoly((-1, 1))  # hand Euclid: l^2 - 1 = (l + 1)(l - 1)
    p = LambdaPoly((2, 5, 7))
    assert poly_gcd(p, LambdaPoly.const(1)) == LambdaPoly.const(1)
    assert poly_gcd(LambdaPoly(), LambdaPoly((0, 1))) == LambdaPoly((0, 1))
    assert poly_gcd(LambdaPoly(), LambdaPoly((0, 3))) == LambdaPoly((0, 1))
    with pytest.raises(BothZero):
        poly_gcd(LambdaPoly(), LambdaPoly())


@settings(max_examples=60, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both_and_is_monic(p, q):
    g = poly_gcd(p, q)
    assert g.leading == 1
    assert p.div_rem(g)[1].is_zero
    assert q.div_rem(g)[1].is_zero


def test_instantiate_examples():
    assert instantiate(1 - LAM, F(1, 2)) == F(1, 2)
    assert instantiate(2 / (1 - LAM), F(1, 3)) == 3
    with pytest.raises(PoleAtLambda):
        instantiate(1 / (1 - LAM), F(1))


def test_canonicalization_idempotent():
    e = (3 - 3 * LAM ** 2) / (2 - 2 * LAM)
    again = FieldElem.from_polys(e.num, e.den)
    assert again.num == e.num and again.den == e.den
    assert e == F(3, 2) * (1 + LAM)


def test_canonical_denominator_is_monic():
    e = 1 / (2 - 2 * LAM)
    assert e.den.leading == 1
    assert e == F(-1, 2) / (LAM - 1)


@settings(max_examples=60, deadline=None)
@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if not a.is_zero:
        assert a * a.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(elems, elems, st.sampled_from(["add", "sub", "mul"]),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_instantiation_is_a_homomorphism(a, b, op, lam0):
    combined = field_arith(a, b, op)
    try:
        left = instantiate(combined, lam0)
        ra = instantiate(a, lam0)
        rb = instantiate(b, lam0)
    except PoleAtLambda:
        return
    right = {"add": ra + rb, "sub": ra - rb, "mul": ra * rb}[op]
    assert left == right


def test_structural_equality():
    a = (1 - LAM ** 2) / (1 - LAM)
    b = 1 + LAM
    assert a == b and hash(a) == hash(b)
    assert (1 / (1 - LAM)) != (1 / (1 + LAM))


def test_equality_with_plain_numbers():
    assert const(3) == 3
    assert const(F(1, 2), F(1, 7)) == F(1, 2)
    assert (LAM - LAM) == 0
    assert LAM != 1


def test_instantiated_mode_arithmetic():
    lam0 = F(1, 2)
    x = lam_elem(lam0)
    assert x + x == 1
    assert x.instantiate(lam0) == lam0
    with pytest.raises(ModeMismatch):
        x.instantiate(F(1, 3))


def test_canonical_string_forms():
    assert str((1 - LAM) / 2) == "(-1/2)*l^1 + 1/2"
    assert str(const(7)) == "7"
    assert str(const(0)) == "0"
    assert str(LAM ** 2 * 2 - 3 * LAM + 1) == "(2)*l^2 + (-3)*l^1 + 1"
    assert str(2 / (1 - LAM)) == "(-2) / ((1)*l^1 + -1)"
    assert str(const(F(-7, 3), F(1, 5))) == "-7/3"


def test_pow_and_negative_pow():
    assert (1 + LAM) ** 0 == 1
    assert (1 + LAM) ** 3 == (1 + LAM) * (1 + LAM) * (1 + LAM)
    assert (1 - LAM) ** -2 == 1 / ((1 - LAM) * (1 - LAM))
