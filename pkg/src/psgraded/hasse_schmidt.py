"""Generalized binomials, the Euler-type derivation of a linear form, and its
Hasse-Schmidt family ``H_n(x^a) = C(lambda(a), n) x^a`` over Z/p.

The ``verify_*`` functions return plain booleans; the matching ``*_sides``
helpers return both sides of an identity so callers can report the first
differing term.
"""

from __future__ import annotations

import itertools
import math
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _fallback, kernels
from .errors import InputError
from .grading import is_lambda_homogeneous
from .lattice import LinearForm
from .poly import Exponent, LaurentPoly, TruncatedSeries, check_prime, frob_power, partial_derivative

DEFAULT_ORDER = 8
_INT64_SAFE = 2**62


def gen_binomial(z: int, d: int) -> int:
    """Exact C(z, d) for any integer z, with C(-m, d) = (-1)^d C(m + d - 1, d)."""
    if d < 0:
        raise InputError("lower argument must be nonnegative")
    if z >= 0:
        return math.comb(z, d)
    v = math.comb(-z + d - 1, d)
    return -v if d % 2 else v


def gen_binomial_mod_p(z: int, d: int, p: int) -> int:
    """C(z, d) mod p through Lucas's theorem (negation rule first when z < 0)."""
    if d < 0:
        raise InputError("lower argument must be nonnegative")
    n = z if z >= 0 else -z + d - 1
    binom = kernels.binom_mod if n < _INT64_SAFE and d < _INT64_SAFE else _fallback.binom_mod
    v = binom(n, d, p)
    if z < 0 and d % 2:
        v = (-v) % p
    return v


@dataclass(frozen=True)
class HSFamily:
    """The sequence ``(1, Delta_lambda, H_2, ...)`` attached to a linear form over Z/p."""

    lam: LinearForm
    p: int

    def __post_init__(self):
        check_prime(self.p)

    @property
    def r(self) -> int:
        return self.lam.r

    def check(self, *polys: LaurentPoly) -> None:
        for f in polys:
            if f.p != self.p or f.r != self.r:
                raise InputError(
                    f"polynomial over (p={f.p}, r={f.r}) for a family over (p={self.p}, r={self.r})"
                )


def _scale_by_weight(f: LaurentPoly, scalars: dict[Exponent, int]) -> LaurentPoly:
    p = f.p
    out = {}
    for a, c in f.terms.items():
        v = c * scalars[a] % p
        if v:
            out[a] = v
    return LaurentPoly._raw(p, f.r, out)


def delta_lambda(lam: LinearForm, f: LaurentPoly) -> LaurentPoly:
    """Multiply each term ``u x^a`` by ``lambda(a)`` mod p."""
    l = lam.l
    if len(l) != f.r:
        raise InputError(f"form on Z^{len(l)} applied in {f.r} variables")
    p, mul = f.p, operator.mul
    out = {a: v for a, c in f._terms.items() if (v := c * sum(map(mul, l, a)) % p)}
    return LaurentPoly._raw(p, f.r, out)


def delta_lambda_via_partials(lam: LinearForm, f: LaurentPoly) -> LaurentPoly:
    """``sum_i l_i x_i d/dx_i f`` assembled from formal partial derivatives."""
    if lam.r != f.r:
        raise InputError(f"form on Z^{lam.r} applied in {f.r} variables")
    out = LaurentPoly.zero(f.p, f.r)
    for i, li in enumerate(lam.l):
        if li % f.p:
            xi = LaurentPoly.variable(f.p, f.r, i)
            out = out + (xi * partial_derivative(f, i)).scale(li)
    return out


def delta_power(lam: LinearForm, f: LaurentPoly, k: int) -> LaurentPoly:
    """Apply delta_lambda k times, literally."""
    for _ in range(k):
        f = delta_lambda(lam, f)
    return f


def hs_apply(h: HSFamily, n: int, f: LaurentPoly) -> LaurentPoly:
    """``H_n(sum u_a x^a) = sum u_a C(lambda(a), n) x^a`` over Z/p."""
    if n < 0:
        raise InputError("Hasse-Schmidt index must be nonnegative")
    h.check(f)
    if n == 0 or f.is_zero():
        return f
    exps = list(f.terms)
    weights = [h.lam(a) for a in exps]
    if max(abs(w) for w in weights) + n < _INT64_SAFE:
        binoms = kernels.gen_binom_mod_array(np.array(weights, dtype=np.int64), n, h.p).tolist()
    else:
        binoms = [gen_binomial_mod_p(w, n, h.p) for w in weights]
    return _scale_by_weight(f, dict(zip(exps, binoms)))


def first_mismatch(lhs: LaurentPoly, rhs: LaurentPoly) -> tuple[Exponent, int, int] | None:
    """Lexicographically first exponent where the two sides differ."""
    keys = sorted(set(lhs.terms) | set(rhs.terms))
    for a in keys:
        x, y = lhs.coeff(a), rhs.coeff(a)
        if x != y:
            return a, x, y
    return None


def leibniz_sides(h: HSFamily, n: int, f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    h.check(f, g)
    lhs = hs_apply(h, n, f * g)
    rhs = LaurentPoly.zero(h.p, h.r)
    for i in range(n + 1):
        rhs = rhs + hs_apply(h, i, f) * hs_apply(h, n - i, g)
    return lhs, rhs


def verify_leibniz(h: HSFamily, n: int, f: LaurentPoly, g: LaurentPoly) -> bool:
    lhs, rhs = leibniz_sides(h, n, f, g)
    return lhs == rhs


def box_window(r: int, bound: int) -> Iterable[Exponent]:
    """All exponent vectors with every entry in ``[-bound, bound]``."""
    return itertools.product(range(-bound, bound + 1), repeat=r)


def f_invariance_defects(h: HSFamily, window: Iterable[Sequence[int]]) -> list[Exponent]:
    """Exponents a where Delta^p(x^a), by p-fold application, differs from Delta(x^a).

    Both operators are applied to the sum of all window monomials at once;
    they are additive, so a coefficient mismatch at a pins down x^a.
    """
    p, r, lam = h.p, h.r, h.lam
    terms = {}
    for a in window:
        a = tuple(int(x) for x in a)
        if len(a) != r:
            raise InputError("window exponent of the wrong length")
        terms[a] = 1
    f = LaurentPoly._raw(p, r, terms)
    lhs, rhs = delta_power(lam, f, p), delta_lambda(lam, f)
    return sorted(a for a in terms if lhs.coeff(a) != rhs.coeff(a))


def verify_f_invariance(h: HSFamily, window: Iterable[Sequence[int]]) -> bool:
    return not f_invariance_defects(h, window)


def phi_automorphism(h: HSFamily, f: LaurentPoly, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``sum_{l<N} H_l(f) t^l``."""
    if N <= 0:
        raise InputError("truncation order must be positive")
    h.check(f)
    return TruncatedSeries(h.p, h.r, [hs_apply(h, l, f) for l in range(N)])


def hsfrob_sides(h: HSFamily, a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """``H_p(a^p b)`` against ``a^p H_p(b) + Delta(a)^p b``."""
    h.check(a, b)
    p = h.p
    ap = frob_power(a, 1)
    lhs = hs_apply(h, p, ap * b)
    rhs = ap * hs_apply(h, p, b) + frob_power(hs_apply(h, 1, a), 1) * b
    return lhs, rhs


def verify_hsfrob_identity(h: HSFamily, a: LaurentPoly, b: LaurentPoly) -> bool:
    lhs, rhs = hsfrob_sides(h, a, b)
    return lhs == rhs


def verify_eigen_action(h: HSFamily, n: int, f: LaurentPoly) -> bool:
    """For homogeneous f of weight w, check ``H_n(f) == C(w, n) f``.

    Raises InputError when f is not homogeneous for the family's form.
    """
    h.check(f)
    wit = is_lambda_homogeneous(h.lam, f)
    if wit is None:
        raise InputError("polynomial is not homogeneous for this linear form")
    return hs_apply(h, n, f) == f.scale(gen_binomial_mod_p(wit.weight, n, h.p))
