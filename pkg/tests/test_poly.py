import pytest
from hypothesis import given, settings

from psgraded.errors import InputError
from psgraded.poly import (
    LaurentPoly,
    TruncatedSeries,
    check_prime,
    format_poly,
    frob_power,
    ideal_from_json,
    ideal_to_json,
    is_prime,
    parse_poly,
    partial_derivative,
    poly_from_json,
    poly_to_json,
)
from strategies import poly_pairs, polys


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    for bad in (0, 1, 4, 2**31 + 11):
        with pytest.raises(InputError):
            check_prime(bad)


def test_coefficients_reduce_and_zeros_drop():
    f = LaurentPoly(3, 2, {(1, 0): 4, (0, 1): 3})
    assert f.terms == {(1, 0): 1}
    assert LaurentPoly(3, 2, {(1, 1): 6}).is_zero()


def test_wrong_arity_rejected():
    with pytest.raises(InputError):
        LaurentPoly(3, 2, {(1, 2, 3): 1})


def test_mixing_rings_rejected():
    with pytest.raises(InputError):
        LaurentPoly.variable(3, 2, 0) + LaurentPoly.variable(5, 2, 0)


@given(poly_pairs())
def test_ring_axioms(fg):
    f, g = fg
    h = f * f + g
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert f - f == LaurentPoly.zero(f.p, f.r)
    assert f * LaurentPoly.constant(f.p, f.r) == f


@given(polys(max_terms=4, lo=-2, hi=2))
@settings(max_examples=60)
def test_frobenius_is_pth_power(f):
    assert f**f.p == frob_power(f, 1)
    assert frob_power(frob_power(f, 1), 1) == frob_power(f, 2)


def test_laurent_inverse_monomial():
    x = LaurentPoly.variable(5, 1, 0)
    assert x * LaurentPoly.monomial(5, (-1,)) == 1
    assert (x ** -2).terms == {(-2,): 1}
    with pytest.raises(InputError):
        (x + 1) ** -1


@given(poly_pairs(max_terms=4))
def test_partial_derivative_product_rule(fg):
    f, g = fg
    for i in range(f.r):
        assert partial_derivative(f * g, i) == partial_derivative(f, i) * g + f * partial_derivative(g, i)


@given(polys())
def test_format_parse_round_trip(f):
    names = ["x", "y", "z"][: f.r]
    assert parse_poly(format_poly(f, names), names, f.p) == f


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x^2*z^4 + x*y^2*z^2 + y^4", {(2, 0, 4): 1, (1, 2, 2): 1, (0, 4, 0): 1}),
        ("x^-1 - 2*y", {(-1, 0, 0): 1, (0, 1, 0): 3}),
        ("-z + 5", {(0, 0, 1): 4}),
    ],
)
def test_parse_examples(text, expected):
    assert parse_poly(text, ["x", "y", "z"], 5).terms == expected


@pytest.mark.parametrize("text", ["x^", "x +", "w", "x**2", "2x", ""])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_poly(text, ["x", "y"], 5)


@given(polys())
def test_json_round_trip(f):
    obj = poly_to_json(f)
    g, names = poly_from_json(obj)
    assert g == f
    assert poly_to_json(g, names) == obj


def test_ideal_json_round_trip():
    gens = [parse_poly("x*y - z^2", ["x", "y", "z"], 3), parse_poly("x + 1", ["x", "y", "z"], 3)]
    obj = ideal_to_json(gens, 3, ["x", "y", "z"])
    back, p, names = ideal_from_json(obj)
    assert back == gens and p == 3 and ideal_to_json(back, p, names) == obj


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"vars": ["x"], "terms": []},
        {"p": 4, "vars": ["x"], "terms": []},
        {"p": 5, "vars": ["x"], "terms": [{"c": 7, "e": [1]}]},
        {"p": 5, "vars": ["x"], "terms": [{"c": 0, "e": [1]}]},
        {"p": 5, "vars": ["x"], "terms": [{"c": 1, "e": [1, 2]}]},
        {"p": 5, "vars": ["x"], "terms": [{"c": 1, "e": [1]}, {"c": 2, "e": [1]}]},
        {"p": 5, "vars": ["x"], "terms": [{"c": 1, "e": [2**40]}]},
        {"p": 5, "vars": ["x"], "terms": [{"c": 1.5, "e": [1]}]},
    ],
)
def test_json_rejects(obj):
    with pytest.raises(InputError):
        poly_from_json(obj)


def test_truncated_series_product_drops_high_order():
    x = LaurentPoly.variable(2, 1, 0)
    one = LaurentPoly.constant(2, 1)
    s = TruncatedSeries(2, 1, [one, x, LaurentPoly.zero(2, 1)])
    sq = s * s
    assert sq.coeffs[0] == one and sq.coeffs[1].is_zero() and sq.coeffs[2] == x * x
    assert sq.order == 3
