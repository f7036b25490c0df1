"""Subgroups of Z^r in Hermite normal form, and the support lattices of polynomials.

HNF convention: rows in echelon form, pivots positive, and every entry above
a pivot reduced into ``[0, pivot)``. Two lattices are equal exactly when their
HNF bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError
from .poly import LaurentPoly

Vector = tuple[int, ...]


def _hnf_rows(rows: list[list[int]], ncols: int) -> list[list[int]]:
    A = [row[:] for row in rows if any(row)]
    pr = 0
    pivot_cols = []
    for col in range(ncols):
        if pr >= len(A):
            break
        while True:
            nz = [i for i in range(pr, len(A)) if A[i][col]]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(A[i][col]))
            A[pr], A[i_min] = A[i_min], A[pr]
            piv = A[pr]
            done = True
            for i in range(pr + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // piv[col]
                    A[i] = [a - q * b for a, b in zip(A[i], piv)]
                    if A[i][col]:
                        done = False
            if done:
                break
        if pr < len(A) and A[pr][col]:
            if A[pr][col] < 0:
                A[pr] = [-a for a in A[pr]]
            piv = A[pr]
            for i in range(pr):
                q = A[i][col] // piv[col]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], piv)]
            pivot_cols.append(col)
            pr += 1
        A = A[:pr] + [row for row in A[pr:] if any(row)]
    return A[:pr]


@dataclass(frozen=True)
class IntegerLattice:
    r: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_generators(cls, r: int, rows: Iterable[Sequence[int]]) -> IntegerLattice:
        return hnf(rows, r)

    @classmethod
    def zero(cls, r: int) -> IntegerLattice:
        return cls(r, ())

    @classmethod
    def full(cls, r: int) -> IntegerLattice:
        return cls(r, tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def reduce(self, v: Sequence[int]) -> Vector:
        """Remainder of v after subtracting basis rows pivot by pivot."""
        if len(v) != self.r:
            raise InputError(f"vector of length {len(v)} in ambient Z^{self.r}")
        w = list(v)
        for row, c in zip(self.basis, self.pivots()):
            q = w[c] // row[c]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
        return tuple(w)

    def __contains__(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def contains_lattice(self, other: IntegerLattice) -> bool:
        if other.r != self.r:
            raise InputError("ambient rank mismatch")
        return all(v in self for v in other.basis)

    def orthogonal_complement(self) -> IntegerLattice:
        """All integer vectors orthogonal to the lattice, as a lattice in HNF."""
        return integer_kernel(self.basis, self.r)

    def saturation(self) -> IntegerLattice:
        return self.orthogonal_complement().orthogonal_complement()

    def is_saturated(self) -> bool:
        return self.saturation() == self


def hnf(rows: Iterable[Sequence[int]], r: int | None = None) -> IntegerLattice:
    """Canonical HNF basis of the subgroup of Z^r generated by ``rows``."""
    rows = [list(map(int, row)) for row in rows]
    if r is None:
        if not rows:
            raise InputError("ambient rank needed for an empty generator list")
        r = len(rows[0])
    if any(len(row) != r for row in rows):
        raise InputError("ragged generator matrix")
    return IntegerLattice(r, tuple(tuple(row) for row in _hnf_rows(rows, r)))


def integer_kernel(rows: Sequence[Sequence[int]], r: int) -> IntegerLattice:
    """Lattice of l in Z^r with ``row . l == 0`` for every row."""
    k = len(rows)
    if k == 0:
        return IntegerLattice.full(r)
    aug = [[rows[i][j] for i in range(k)] + [int(j == t) for t in range(r)] for j in range(r)]
    red = _hnf_rows(aug, k + r)
    kern = [row[k:] for row in red if not any(row[:k])]
    return hnf(kern, r)


def lattice_of_poly(f: LaurentPoly) -> IntegerLattice:
    """Lattice generated by differences of support points (zero for monomials and 0)."""
    supp = sorted(f.support())
    if len(supp) < 2:
        return IntegerLattice.zero(f.r)
    anchor = supp[0]
    return hnf(
        [[a - b for a, b in zip(s, anchor)] for s in supp[1:]],
        f.r,
    )


def lattice_of_ideal(gens: Sequence[LaurentPoly], r: int | None = None) -> IntegerLattice:
    if not gens:
        if r is None:
            raise InputError("ambient rank needed for an empty generator list")
        return IntegerLattice.zero(r)
    r = gens[0].r if r is None else r
    rows: list[list[int]] = []
    for g in gens:
        if g.r != r:
            raise InputError("generators live in different rings")
        rows.extend(lattice_of_poly(g).basis)
    return hnf(rows, r)


def lattice_sum(L1: IntegerLattice, L2: IntegerLattice) -> IntegerLattice:
    if L1.r != L2.r:
        raise InputError(f"ambient mismatch: Z^{L1.r} vs Z^{L2.r}")
    return hnf(L1.basis + L2.basis, L1.r)


@dataclass(frozen=True)
class LinearForm:
    """Nonzero integer form ``a -> sum(l_i * a_i)`` on Z^r."""

    l: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(int(x) for x in self.l))
        if not any(self.l):
            raise InputError("a linear form must be nonzero")

    @property
    def r(self) -> int:
        return len(self.l)

    def __call__(self, a: Sequence[int]) -> int:
        if len(a) != len(self.l):
            raise InputError(f"exponent of length {len(a)} for a form on Z^{len(self.l)}")
        return sum(x * y for x, y in zip(self.l, a))


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    first = next(x for x in v if x)
    return tuple(-x for x in v) if first < 0 else tuple(v)


def orthogonal_form(L: IntegerLattice) -> LinearForm | None:
    """First row of the HNF kernel basis, primitive with positive leading entry."""
    if L.rank >= L.r:
        return None
    kern = L.orthogonal_complement()
    return LinearForm(_primitive(kern.basis[0]))


def rank_of_poly(f: LaurentPoly) -> int:
    return lattice_of_poly(f).rank


def pseudo_m_nomial_check(f: LaurentPoly, m: int) -> bool:
    """True iff the support lattice of f has rank below m."""
    if m <= 0:
        raise InputError("m must be positive")
    return rank_of_poly(f) < m


def lattice_to_json(L: IntegerLattice, rows: Sequence[Sequence[int]] | None = None) -> dict:
    return {
        "r": L.r,
        "rows": [list(v) for v in (L.basis if rows is None else rows)],
        "rank": L.rank,
        "hnf": [list(v) for v in L.basis],
    }


def lattice_from_json(obj) -> tuple[IntegerLattice, list[list[int]]]:
    if not isinstance(obj, dict) or "r" not in obj or "rows" not in obj:
        raise InputError("lattice JSON needs 'r' and 'rows'")
    r, rows = obj["r"], obj["rows"]
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise InputError("'r' must be a nonnegative integer")
    if not isinstance(rows, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
        for row in rows
    ):
        raise InputError("'rows' must be a list of integer lists")
    return hnf(rows, r), rows
