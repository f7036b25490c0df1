import warnings

import pytest
from hypothesis import given

from psgraded.errors import EmptyIdealWarning, InputError
from psgraded.grading import (
    certificate_to_json,
    is_lambda_homogeneous,
    pseudo_graded_certificate,
    verify_lambda_ideal,
)
from psgraded.lattice import LinearForm, lattice_of_ideal
from psgraded.poly import LaurentPoly, parse_poly
from strategies import polys

XYZ = ["x", "y", "z"]


def test_trinomial_certificate():
    f = parse_poly("x^2*z^4 + x*y^2*z^2 + y^4", XYZ, 2)
    lam = pseudo_graded_certificate([f])
    wit = is_lambda_homogeneous(lam, f)
    assert wit is not None
    assert {lam(a) for a in f.support()} == {wit.weight}


def test_affine_line_is_silent():
    f = parse_poly("x + y + 1", ["x", "y"], 3)
    assert pseudo_graded_certificate([f]) is None
    assert certificate_to_json([f], None)["pseudo_graded"] == "unknown"


def test_binomial_ideal_certificate():
    gens = [parse_poly("x*y - z^2", XYZ, 5)]
    lam = pseudo_graded_certificate(gens)
    assert verify_lambda_ideal(lam, gens)
    cert = certificate_to_json(gens, lam)
    assert cert["pseudo_graded"] is True
    assert cert["weights"] == [{"gen": 0, "weight": lam((1, 1, 0))}]


def test_zero_polynomial_is_homogeneous():
    wit = is_lambda_homogeneous(LinearForm((1, 2)), LaurentPoly.zero(3, 2))
    assert wit.weight == 0


def test_empty_ideal_warns():
    with pytest.warns(EmptyIdealWarning):
        lam = pseudo_graded_certificate([], 3)
    assert lam.l == (1, 0, 0)
    with pytest.raises(InputError):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            pseudo_graded_certificate([])


def test_arity_mismatch():
    with pytest.raises(InputError):
        is_lambda_homogeneous(LinearForm((1, 1)), LaurentPoly.variable(3, 3, 0))


@given(polys(r=3, max_terms=3))
def test_certificate_is_sound(f):
    lam = pseudo_graded_certificate([f])
    if lattice_of_ideal([f]).rank < 3:
        assert lam is not None and verify_lambda_ideal(lam, [f])
    else:
        assert lam is None


@given(polys(p=3, r=3, max_terms=2), polys(p=3, r=3, max_terms=2))
def test_certificate_for_pairs(f, g):
    lam = pseudo_graded_certificate([f, g])
    if lam is not None:
        assert verify_lambda_ideal(lam, [f, g])
