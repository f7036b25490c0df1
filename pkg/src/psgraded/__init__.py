"""Support lattices, pseudo-graded certificates, Hasse-Schmidt families over Z/p,
binomial ideal rank arithmetic and idempotents of Frobenius transforms."""

from .errors import EmptyIdealWarning, InputError
from .grading import is_lambda_homogeneous, pseudo_graded_certificate, verify_lambda_ideal
from .hasse_schmidt import HSFamily, delta_lambda, gen_binomial, gen_binomial_mod_p, hs_apply, phi_automorphism
from .kernels import BACKEND
from .lattice import IntegerLattice, LinearForm, hnf, integer_kernel, lattice_of_ideal, lattice_of_poly, orthogonal_form
from .poly import LaurentPoly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EmptyIdealWarning",
    "HSFamily",
    "InputError",
    "IntegerLattice",
    "LaurentPoly",
    "LinearForm",
    "delta_lambda",
    "gen_binomial",
    "gen_binomial_mod_p",
    "hnf",
    "hs_apply",
    "integer_kernel",
    "is_lambda_homogeneous",
    "lattice_of_ideal",
    "lattice_of_poly",
    "orthogonal_form",
    "parse_poly",
    "phi_automorphism",
    "pseudo_graded_certificate",
    "verify_lambda_ideal",
]
