"""Binomial ideals of integer lattices and the rank bookkeeping for toric quotients.

Dimensions come from the formula ``r - rank``; nothing here computes Krull
dimension independently, and primality of a lattice ideal is never checked
(only saturation of the lattice is reported).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InputError
from .grading import pseudo_graded_certificate, verify_lambda_ideal
from .lattice import (
    IntegerLattice,
    LinearForm,
    hnf,
    integer_kernel,
    lattice_of_ideal,
    lattice_of_poly,
    lattice_sum,
    orthogonal_form,
)
from .poly import Exponent, LaurentPoly


@dataclass(frozen=True)
class BinomialIdeal:
    """Generators ``x^plus - x^minus`` with disjoint supports, plus their lattice."""

    r: int
    generators: tuple[tuple[Exponent, Exponent], ...]
    lattice: IntegerLattice

    def __post_init__(self):
        for plus, minus in self.generators:
            if len(plus) != self.r or len(minus) != self.r:
                raise InputError("binomial exponent of the wrong length")
            if any(a < 0 for a in plus + minus) or any(a and b for a, b in zip(plus, minus)):
                raise InputError("binomial parts must be nonnegative with disjoint support")
            if tuple(a - b for a, b in zip(plus, minus)) not in self.lattice:
                raise InputError("binomial difference outside the stored lattice")

    def polys(self, p: int) -> list[LaurentPoly]:
        return [LaurentPoly(p, self.r, {plus: 1, minus: -1}) for plus, minus in self.generators]


def split_signs(v: Sequence[int]) -> tuple[Exponent, Exponent]:
    return tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)


def binomial_ideal_from_lattice(L: IntegerLattice) -> BinomialIdeal:
    return BinomialIdeal(L.r, tuple(split_signs(v) for v in L.basis), L)


def toric_dimension(L: IntegerLattice) -> int:
    return L.r - L.rank


def parametrization_lattice(c: Sequence[Sequence[int]]) -> IntegerLattice:
    """Kernel of ``b -> sum b_i c_i`` for the monomial map ``x_i -> t^{c_i}``."""
    if not c:
        raise InputError("parametrization needs at least one variable")
    u = len(c[0])
    if any(len(ci) != u for ci in c):
        raise InputError("ragged parametrization matrix")
    columns = [[ci[j] for ci in c] for j in range(u)]
    return integer_kernel(columns, len(c))


def quotient_pseudo_graded(J: BinomialIdeal, I_gens: Sequence[LaurentPoly]) -> LinearForm | None:
    """Grading certificate for ``J + I`` from the sum of their support lattices."""
    for g in I_gens:
        if g.r != J.r:
            raise InputError("generator lives in a different ring than the binomial ideal")
    if not J.generators and not I_gens:
        return pseudo_graded_certificate([], J.r)
    combined = lattice_sum(J.lattice, lattice_of_ideal(list(I_gens), J.r))
    lam = orthogonal_form(combined)
    if lam is None:
        return None
    p = I_gens[0].p if I_gens else 2
    if not verify_lambda_ideal(lam, J.polys(p) + list(I_gens)):
        raise AssertionError("orthogonal form failed to homogenize the generators")
    return lam


@dataclass(frozen=True)
class MonomialMapData:
    """Images ``f_i = z^{anchor_i} g_i`` of a map into s variables, g_i supported on Lambda_i."""

    s: int
    anchors: tuple[Exponent, ...]
    factor_lattices: tuple[IntegerLattice, ...]
    m: int
    images: tuple[LaurentPoly, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.m <= 0:
            raise InputError("m must be positive")
        if len(self.anchors) != len(self.factor_lattices):
            raise InputError("one anchor per factor lattice")
        for a, L in zip(self.anchors, self.factor_lattices):
            if len(a) != self.s or L.r != self.s:
                raise InputError(f"anchor or lattice outside Z^{self.s}")
            if L.rank > self.m - 1:
                raise InputError(f"factor lattice of rank {L.rank} exceeds m - 1 = {self.m - 1}")

    @property
    def r(self) -> int:
        return len(self.anchors)

    @classmethod
    def from_polys(cls, fs: Sequence[LaurentPoly], m: int) -> MonomialMapData:
        if not fs:
            raise InputError("need at least one image polynomial")
        s = fs[0].r
        if any(f.r != s for f in fs):
            raise InputError("image polynomials live in different rings")
        if any(f.is_zero() for f in fs):
            raise InputError("image polynomials must be nonzero")
        anchors = tuple(min(f.support()) for f in fs)
        return cls(s, anchors, tuple(lattice_of_poly(f) for f in fs), m, tuple(fs))

    def sigma(self, b: Sequence[int]) -> Exponent:
        if len(b) != self.r:
            raise InputError(f"vector of length {len(b)} for a map from Z^{self.r}")
        out = [0] * self.s
        for bi, a in zip(b, self.anchors):
            for j in range(self.s):
                out[j] += bi * a[j]
        return tuple(out)


def pushforward_rank_bound(mp: MonomialMapData, theta: IntegerLattice) -> tuple[IntegerLattice, int]:
    """``sigma(theta) + Lambda_1 + ... + Lambda_r``, a lattice containing the image's support lattice."""
    if theta.r != mp.r:
        raise InputError(f"theta lives in Z^{theta.r}, map has {mp.r} source variables")
    rows = [mp.sigma(v) for v in theta.basis]
    for L in mp.factor_lattices:
        rows.extend(L.basis)
    lat = hnf(rows, mp.s)
    if lat.rank > theta.rank + mp.r * (mp.m - 1):
        raise AssertionError("pushforward rank exceeds the a priori bound")
    return lat, lat.rank


def corollary_arithmetic(d: int, r: int, m: int) -> bool:
    """The hypothesis ``r(m-1) < d``."""
    return r * (m - 1) < d


@dataclass(frozen=True)
class CorollaryReport:
    d: int
    hypothesis: bool
    refined_bound: int | None
    refined_hypothesis: bool | None
    lattice_rank: int | None
    lam: LinearForm | None
    toric_saturated: bool | None = None

    @property
    def applicable(self) -> bool:
        if self.refined_hypothesis is None:
            return self.hypothesis
        return self.refined_hypothesis

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "hypothesis_r(m-1)<d": self.hypothesis,
            "refined_bound": self.refined_bound,
            "refined_hypothesis": self.refined_hypothesis,
            "lattice_rank": self.lattice_rank,
            "applicable": self.applicable,
            "lambda": None if self.lam is None else list(self.lam.l),
            "toric_saturated": self.toric_saturated,
        }


def corollary_applicability(
    toric_rank: int | None,
    s: int,
    mp: MonomialMapData,
    theta: IntegerLattice | None = None,
    toric_lattice: IntegerLattice | None = None,
) -> CorollaryReport:
    """Check ``r(m-1) < d`` and the refined ``rank(sigma theta) + sum rank(Lambda_i) < d``.

    ``theta`` defaults to the zero lattice (a monomial ideal). A grading form
    on Z^s is produced only when a hypothesis holds and the toric lattice
    itself is supplied.
    """
    if toric_lattice is not None:
        if toric_lattice.r != s:
            raise InputError("toric lattice lives in the wrong ambient space")
        if toric_rank is not None and toric_rank != toric_lattice.rank:
            raise InputError("toric rank disagrees with the supplied lattice")
        toric_rank = toric_lattice.rank
    if toric_rank is None:
        raise InputError("need the toric rank or the toric lattice")
    if mp.s != s:
        raise InputError("map target does not match s")
    d = s - toric_rank
    theta = IntegerLattice.zero(mp.r) if theta is None else theta
    bound_lat, bound_rank = pushforward_rank_bound(mp, theta)
    sigma_rank = hnf([mp.sigma(v) for v in theta.basis], s).rank
    refined = sigma_rank + sum(L.rank for L in mp.factor_lattices)
    hyp = corollary_arithmetic(d, mp.r, mp.m)
    refined_ok = refined < d
    lam = None
    if (hyp or refined_ok) and toric_lattice is not None:
        lam = orthogonal_form(lattice_sum(toric_lattice, bound_lat))
    return CorollaryReport(
        d=d,
        hypothesis=hyp,
        refined_bound=refined,
        refined_hypothesis=refined_ok,
        lattice_rank=bound_rank,
        lam=lam,
        toric_saturated=None if toric_lattice is None else toric_lattice.is_saturated(),
    )
