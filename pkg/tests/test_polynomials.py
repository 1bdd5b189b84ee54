import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ecpoly import (
    IntPolynomial,
    MalformedPolynomialJson,
    ONE,
    X,
    ZERO,
    ZeroPolynomial,
    times_x_plus_one,
)

coeff_lists = st.lists(st.integers(min_value=-50, max_value=50), max_size=10)
polys = coeff_lists.map(IntPolynomial)


def test_trailing_zeros_stripped():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).coeffs == ()
    assert IntPolynomial([]).is_zero()


def test_rejects_non_int_coefficients():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])
    with pytest.raises(TypeError):
        IntPolynomial([True])


def test_immutable():
    p = IntPolynomial([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_from_terms():
    assert IntPolynomial.from_terms({3: 1, 1: 4}).coeffs == (0, 4, 0, 1)
    assert IntPolynomial.from_terms({}).is_zero()
    with pytest.raises(ValueError):
        IntPolynomial.from_terms({-1: 2})


def test_degree_and_min_support():
    p = IntPolynomial([0, 0, 3, 0, 1])
    assert p.degree() == 4
    assert p.min_support() == 2
    with pytest.raises(ZeroPolynomial):
        ZERO.degree()
    with pytest.raises(ZeroPolynomial):
        ZERO.min_support()


def test_coefficient_out_of_range_is_zero():
    p = IntPolynomial([1, 2])
    assert p.coefficient(5) == 0
    assert p.coefficient(-1) == 0
    assert p.coefficient(1) == 2


def test_shift_negative_rejected():
    with pytest.raises(ValueError):
        X.shift(-1)


def test_constants():
    assert ZERO.is_zero()
    assert ONE.coeffs == (1,)
    assert X.coeffs == (0, 1)


def test_to_text_examples():
    assert ZERO.to_text() == "0"
    assert IntPolynomial([0, 0, 0, 4, 1]).to_text() == "x^4 + 4x^3"
    assert IntPolynomial([2]).to_text() == "2"
    assert IntPolynomial([0, 1]).to_text() == "x"
    assert IntPolynomial([-1, 1]).to_text() == "x - 1"
    assert IntPolynomial([0, -3]).to_text() == "-3x"
    assert IntPolynomial([5, 0, 1]).to_text() == "x^2 + 5"


def test_json_round_trip_examples():
    p = IntPolynomial([0, 0, 0, 0, 9, 6, 1])
    record = p.to_json()
    assert record == {"min_degree": 4, "coeffs": [9, 6, 1]}
    assert json.dumps(record, separators=(",", ":")) == '{"min_degree":4,"coeffs":[9,6,1]}'
    assert IntPolynomial.from_json(record) == p
    assert ZERO.to_json() == {"min_degree": 0, "coeffs": []}
    assert IntPolynomial.from_json(ZERO.to_json()).is_zero()


@pytest.mark.parametrize(
    "record",
    [
        [],
        {"min_degree": 1},
        {"min_degree": 1, "coeffs": [1], "extra": 0},
        {"min_degree": -1, "coeffs": [1]},
        {"min_degree": True, "coeffs": [1]},
        {"min_degree": 0, "coeffs": (1,)},
        {"min_degree": 0, "coeffs": [1.0]},
        {"min_degree": 0, "coeffs": [True]},
    ],
)
def test_from_json_rejects_malformed(record):
    with pytest.raises(MalformedPolynomialJson):
        IntPolynomial.from_json(record)


@given(polys, polys)
def test_add_commutes(p, q):
    assert p.add(q) == q.add(p)


@given(polys, polys, polys)
def test_add_associates(p, q, r):
    assert p.add(q).add(r) == p.add(q.add(r))


@given(polys)
def test_add_zero_identity(p):
    assert p.add(ZERO) == p


@given(polys, st.integers(min_value=0, max_value=6), st.integers(min_value=-9, max_value=9))
def test_evaluate_respects_shift_and_scale(p, k, t):
    assert p.shift(k).evaluate(t) == p.evaluate(t) * t**k
    assert p.scale(3).evaluate(t) == 3 * p.evaluate(t)
    assert times_x_plus_one(p).evaluate(t) == (t + 1) * p.evaluate(t)


@given(polys, polys, st.integers(min_value=-9, max_value=9))
def test_evaluate_additive(p, q, t):
    assert p.add(q).evaluate(t) == p.evaluate(t) + q.evaluate(t)


@given(polys)
def test_json_round_trip(p):
    assert IntPolynomial.from_json(p.to_json()) == p


@given(polys)
def test_normalization_is_canonical(p):
    assert p.coeffs == () or p.coeffs[-1] != 0
    assert IntPolynomial(p.coeffs) == p
