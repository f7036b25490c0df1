"""Homogeneity with respect to an integer linear form, and rank-based grading certificates."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyIdealWarning, InputError
from .lattice import LinearForm, lattice_of_ideal, orthogonal_form
from .poly import Exponent, LaurentPoly

__all__ = [
    "LinearForm",
    "HomogeneityWitness",
    "weight",
    "is_lambda_homogeneous",
    "verify_lambda_ideal",
    "pseudo_graded_certificate",
    "certificate_to_json",
]


@dataclass(frozen=True)
class HomogeneityWitness:
    weight: int
    anchor: Exponent


def weight(lam: LinearForm, a: Sequence[int]) -> int:
    return lam(a)


def is_lambda_homogeneous(lam: LinearForm, f: LaurentPoly) -> HomogeneityWitness | None:
    """Common weight of the support of f, or None if the form is not constant there.

    The zero polynomial gets weight 0 and the zero anchor.
    """
    if lam.r != f.r:
        raise InputError(f"form on Z^{lam.r} applied to a polynomial in {f.r} variables")
    supp = sorted(f.support())
    if not supp:
        return HomogeneityWitness(0, (0,) * f.r)
    w = lam(supp[0])
    if any(lam(a) != w for a in supp[1:]):
        return None
    return HomogeneityWitness(w, supp[0])


def verify_lambda_ideal(lam: LinearForm, gens: Sequence[LaurentPoly]) -> bool:
    return all(is_lambda_homogeneous(lam, g) is not None for g in gens)


def pseudo_graded_certificate(
    gens: Sequence[LaurentPoly], r: int | None = None
) -> LinearForm | None:
    """A form making every generator homogeneous, found from the support lattice.

    Returns None when the lattice has full rank; that only means this criterion
    is silent, not that the quotient fails to be pseudo-graded. An empty
    generator list yields ``(1, 0, ..., 0)`` and an :class:`EmptyIdealWarning`.
    """
    if not gens:
        if r is None:
            raise InputError("ambient rank needed for an empty generator list")
        warnings.warn("zero ideal: every linear form is a certificate", EmptyIdealWarning, stacklevel=2)
        return LinearForm((1,) + (0,) * (r - 1))
    p = gens[0].p
    if any(g.p != p for g in gens):
        raise InputError("generators over different primes")
    L = lattice_of_ideal(gens, r)
    lam = orthogonal_form(L)
    if lam is not None and not verify_lambda_ideal(lam, gens):
        raise AssertionError("orthogonal form failed to homogenize the generators")
    return lam


def certificate_to_json(gens: Sequence[LaurentPoly], lam: LinearForm | None) -> dict:
    if lam is None:
        return {"pseudo_graded": "unknown", "lambda": None, "weights": []}
    weights = []
    for i, g in enumerate(gens):
        wit = is_lambda_homogeneous(lam, g)
        weights.append({"gen": i, "weight": None if wit is None else wit.weight})
    return {
        "pseudo_graded": verify_lambda_ideal(lam, gens),
        "lambda": list(lam.l),
        "weights": weights,
    }
