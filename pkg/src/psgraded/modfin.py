"""Finite-dimensional commutative local algebras over Z/p and their modules.

Truncated polynomial and semigroup algebras stand in for complete local rings.
Modules are given by one action matrix per algebra basis element; everything
here reduces to linear systems over Z/p.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import modp
from .errors import InputError
from .kernels import matmul_mod
from .poly import check_prime, default_names


class ArtinSchreierObstruction(InputError):
    """``u^p - u = c`` has no solution in Z/p for the scalar part c != 0."""


def _mat(a, p: int) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a % p if a.size else a


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """Commutative algebra with basis e_0..e_{n-1} and ``e_i e_j = sum_k c[i, j, k] e_k``."""

    p: int
    labels: tuple[str, ...]
    structure: np.ndarray
    unit: int = 0
    grades: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        check_prime(self.p)
        c = np.asarray(self.structure, dtype=np.int64) % self.p
        n = len(self.labels)
        if c.shape != (n, n, n):
            raise InputError(f"structure constants must have shape ({n}, {n}, {n})")
        if not (0 <= self.unit < n):
            raise InputError("unit index out of range")
        c.setflags(write=False)
        object.__setattr__(self, "structure", c)
        lefts = tuple(_mat(c[i].T, self.p) for i in range(n))
        object.__setattr__(self, "_left", lefts)
        if not np.array_equal(c, c.transpose(1, 0, 2)):
            raise InputError("structure constants are not commutative")
        if not np.array_equal(lefts[self.unit], modp.identity(n)):
            raise InputError("unit element does not act as the identity")
        for i in range(n):
            for j in range(i, n):
                if not np.array_equal(
                    matmul_mod(lefts[i], lefts[j], self.p), self.combine(c[i, j], lefts)
                ):
                    raise InputError("structure constants are not associative")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def combine(self, u, mats) -> np.ndarray:
        """``sum_k u_k mats[k]`` mod p."""
        p = self.p
        out = np.zeros_like(mats[0])
        for k, x in enumerate(np.asarray(u).tolist()):
            if x % p:
                out = (out + (x % p) * mats[k]) % p
        return out

    def left_matrix(self, u) -> np.ndarray:
        """Matrix of multiplication by u on the basis (column j is ``u e_j``)."""
        return self.combine(u, self._left)

    def mul(self, u, v) -> np.ndarray:
        return matmul_mod(self.left_matrix(u), np.asarray(v).reshape(-1, 1), self.p).ravel()

    def power(self, u, e: int) -> np.ndarray:
        result = self.basis_vector(self.unit)
        for _ in range(e):
            result = self.mul(result, u)
        return result

    def is_local(self) -> bool:
        """Sufficient check: the non-unit basis span is a nil ideal (hence the maximal ideal)."""
        others = [i for i in range(self.dim) if i != self.unit]
        for i in others:
            if not modp.is_zero(modp.matpow(self._left[i], self.dim, self.p)):
                return False
            for j in range(self.dim):
                if self.structure[i, j, self.unit]:
                    return False
        return True


def make_truncated_algebra(
    p: int, r: int, N: int, monomial_relations: Sequence[Sequence[int]] = ()
) -> FiniteAlgebra:
    """``Z/p[x_1..x_r] / (m^N + monomial relations)`` on its standard monomials."""
    if N <= 0:
        raise InputError("truncation order must be positive")
    rels = [tuple(a) for a in monomial_relations]
    if any(len(a) != r or min(a, default=0) < 0 for a in rels):
        raise InputError("monomial relations must be nonnegative vectors of length r")

    def survives(e):
        return not any(all(x >= y for x, y in zip(e, a)) for a in rels)

    monos = [
        e
        for e in itertools.product(range(N), repeat=r)
        if sum(e) < N and survives(e)
    ]
    monos.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    if not monos:
        raise InputError("relations kill the unit; the algebra is zero")
    index = {e: i for i, e in enumerate(monos)}
    n = len(monos)
    c = np.zeros((n, n, n), dtype=np.int64)
    for (i, a), (j, b) in itertools.product(enumerate(monos), repeat=2):
        k = index.get(tuple(x + y for x, y in zip(a, b)))
        if k is not None:
            c[i, j, k] = 1
    names = default_names(r)
    labels = tuple(_mono_label(e, names) for e in monos)
    return FiniteAlgebra(p, labels, c, index[(0,) * r], tuple(monos))


def _mono_label(e, names) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
    return "*".join(parts) or "1"


def make_truncated_semigroup_algebra(
    p: int, generators: Sequence[Sequence[int]], N: int
) -> FiniteAlgebra:
    """Semigroup ring of the generators with every element having a coordinate >= N set to zero."""
    if N <= 0:
        raise InputError("truncation bound must be positive")
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise InputError("need at least one generator")
    u = len(gens[0])
    if any(len(g) != u or min(g) < 0 for g in gens):
        raise InputError("generators must be nonnegative vectors of equal length")
    gens = [g for g in gens if any(g)]
    zero = (0,) * u
    elements = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = tuple(a + b for a, b in zip(s, g))
                if max(t) < N and t not in elements:
                    elements.add(t)
                    nxt.append(t)
        frontier = nxt
    elems = sorted(elements, key=lambda e: (sum(e), e))
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    c = np.zeros((n, n, n), dtype=np.int64)
    for (i, a), (j, b) in itertools.product(enumerate(elems), repeat=2):
        k = index.get(tuple(x + y for x, y in zip(a, b)))
        if k is not None:
            c[i, j, k] = 1
    labels = tuple(str(e[0]) if u == 1 else str(e) for e in elems)
    return FiniteAlgebra(p, labels, c, index[zero], tuple(elems))


@dataclass(frozen=True, eq=False)
class FiniteModule:
    algebra: FiniteAlgebra
    dim: int
    actions: tuple[np.ndarray, ...]

    def __post_init__(self):
        A = self.algebra
        p = A.p
        acts = tuple(_mat(x, p).reshape(self.dim, self.dim) for x in self.actions)
        if len(acts) != A.dim:
            raise InputError("need one action matrix per algebra basis element")
        object.__setattr__(self, "actions", acts)
        if not np.array_equal(acts[A.unit], modp.identity(self.dim)):
            raise InputError("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(i, A.dim):
                prod = matmul_mod(acts[i], acts[j], p)
                if not np.array_equal(prod, A.combine(A.structure[i, j], acts)):
                    raise InputError("actions do not represent the algebra")
                if not np.array_equal(prod, matmul_mod(acts[j], acts[i], p)):
                    raise InputError("actions do not commute")

    @property
    def p(self) -> int:
        return self.algebra.p

    def action_of(self, u) -> np.ndarray:
        return self.algebra.combine(u, self.actions)

    @classmethod
    def regular(cls, A: FiniteAlgebra) -> FiniteModule:
        return cls(A, A.dim, tuple(A.left_matrix(A.basis_vector(i)) for i in range(A.dim)))

    @classmethod
    def residue_field(cls, A: FiniteAlgebra) -> FiniteModule:
        """k = A / (non-unit basis span); needs A local in the sense of ``is_local``."""
        if not A.is_local():
            raise InputError("residue field module needs a local algebra")
        acts = tuple(np.array([[int(i == A.unit)]], dtype=np.int64) for i in range(A.dim))
        return cls(A, 1, acts)

    @classmethod
    def trivial(cls, A: FiniteAlgebra, m: int) -> FiniteModule:
        """k^m with every non-unit basis element acting as zero."""
        return direct_sum(*([cls.residue_field(A)] * m))


def direct_sum(*mods: FiniteModule) -> FiniteModule:
    if not mods:
        raise InputError("direct sum of nothing")
    A = mods[0].algebra
    if any(M.algebra is not A for M in mods):
        raise InputError("summands over different algebras")
    m = sum(M.dim for M in mods)
    acts = []
    for i in range(A.dim):
        X = np.zeros((m, m), dtype=np.int64)
        off = 0
        for M in mods:
            X[off : off + M.dim, off : off + M.dim] = M.actions[i]
            off += M.dim
        acts.append(X)
    return FiniteModule(A, m, tuple(acts))


def frobenius_transform(M: FiniteModule) -> FiniteModule:
    """Same space; basis element e now acts as e^p did."""
    A = M.algebra
    acts = tuple(M.action_of(A.power(A.basis_vector(i), A.p)) for i in range(A.dim))
    return FiniteModule(A, M.dim, acts)


def _commutator_operator(X: np.ndarray, p: int) -> np.ndarray:
    """Matrix of ``F -> F X - X F`` on row-major vec(F)."""
    m = X.shape[0]
    I = modp.identity(m)
    return (np.kron(I, X.T) - np.kron(X, I)) % p


def _non_unit(A: FiniteAlgebra) -> list[int]:
    return [i for i in range(A.dim) if i != A.unit]


def endomorphism_algebra(M: FiniteModule) -> list[np.ndarray]:
    """Basis of the matrices commuting with every action."""
    p, m = M.p, M.dim
    blocks = [_commutator_operator(M.actions[i], p) for i in _non_unit(M.algebra)]
    system = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, m * m), dtype=np.int64)
    return [v.reshape(m, m) for v in modp.nullspace(system, p)]


def _is_idempotent(e: np.ndarray, p: int) -> bool:
    return np.array_equal(matmul_mod(e, e, p), e)


def _commutes_with(e: np.ndarray, mats, p: int) -> bool:
    return all(np.array_equal(matmul_mod(e, X, p), matmul_mod(X, e, p)) for X in mats)


def fitting_idempotent(g: np.ndarray, p: int) -> np.ndarray | None:
    """Projection onto the stable image of g along its stable kernel, if both are nonzero."""
    m = g.shape[0]
    G = modp.matpow(g, m, p)
    img = modp.column_space(G, p)
    if img.shape[1] in (0, m):
        return None
    ker = modp.nullspace(G, p).T
    B = np.concatenate([img, ker], axis=1)
    Binv = modp.inverse(B, p)
    if Binv is None:
        raise AssertionError("stable image and kernel are not complementary")
    D = np.zeros((m, m), dtype=np.int64)
    D[: img.shape[1], : img.shape[1]] = modp.identity(img.shape[1])
    return matmul_mod(matmul_mod(B, D, p), Binv, p)


def _shifts(p: int) -> Sequence[int]:
    return range(p) if p <= 64 else (0, 1)


def find_idempotent(M: FiniteModule, seed: int = 0, budget: int = 50) -> np.ndarray | None:
    """A nontrivial idempotent endomorphism, via Fitting decompositions of candidates.

    Candidates are the endomorphism basis followed by ``budget`` random
    combinations drawn with ``seed``. None means the search found nothing; see
    :func:`certify_indecomposable` for when that is exact.
    """
    p, m = M.p, M.dim
    basis = endomorphism_algebra(M)
    if len(basis) <= 1:
        return None
    rng = random.Random(seed)
    candidates = list(basis)
    for _ in range(budget):
        coeffs = [rng.randrange(p) for _ in basis]
        candidates.append(M.algebra.combine(coeffs, basis))
    I = modp.identity(m)
    for f in candidates:
        for u in _shifts(p):
            e = fitting_idempotent((f - u * I) % p, p)
            if e is not None:
                if not (_is_idempotent(e, p) and _commutes_with(e, M.actions, p)):
                    raise AssertionError("Fitting projection is not an idempotent endomorphism")
                return e
    return None


def scalar_part(a: np.ndarray, p: int) -> int | None:
    """The u in Z/p with ``a - u`` nilpotent, or None if a is not scalar plus nilpotent."""
    m = a.shape[0]
    I = modp.identity(m)
    if m % p:
        cands = [int(np.trace(a) % p) * pow(m, -1, p) % p]
    else:
        cands = range(p) if p <= 4096 else ()
    for u in cands:
        if modp.is_zero(modp.matpow((a - u * I) % p, m, p)):
            return u
    return None


def certify_indecomposable(M: FiniteModule) -> bool:
    """Exact check for commutative endomorphism algebras: every element is scalar plus nilpotent.

    Returns False when End(M) is noncommutative or some basis element has two
    eigenvalues; False does not by itself prove decomposability.
    """
    p = M.p
    basis = endomorphism_algebra(M)
    for f, g in itertools.combinations(basis, 2):
        if not np.array_equal(matmul_mod(f, g, p), matmul_mod(g, f, p)):
            return False
    return all(scalar_part(f, p) is not None for f in basis)


def f_decomposable_upto(
    M: FiniteModule, bound: int, seed: int = 0, budget: int = 50
) -> tuple[int, np.ndarray] | None:
    """Least level n <= bound whose n-th Frobenius transform has a nontrivial idempotent."""
    if bound < 0:
        raise InputError("bound must be nonnegative")
    N = M
    for level in range(bound + 1):
        if level:
            N = frobenius_transform(N)
        e = find_idempotent(N, seed=seed, budget=budget)
        if e is not None:
            return level, e
    return None


def _leibniz_system(A: FiniteAlgebra) -> np.ndarray:
    """Rows acting on row-major vec(D), D column j = D(e_j), encoding the Leibniz rule and D(1) = 0."""
    n, p = A.dim, A.p
    c = A.structure
    L = A._left
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                row = np.zeros((n, n), dtype=np.int64)
                row[k, :] += c[i, j]
                row[:, j] -= L[i][k]
                row[:, i] -= L[j][k]
                rows.append(row.ravel() % p)
    for k in range(n):
        row = np.zeros((n, n), dtype=np.int64)
        row[k, A.unit] = 1
        rows.append(row.ravel())
    return np.array(rows, dtype=np.int64)


def is_derivation(A: FiniteAlgebra, D: np.ndarray) -> bool:
    v = np.asarray(D, dtype=np.int64).reshape(-1, 1) % A.p
    return modp.is_zero(matmul_mod(_leibniz_system(A), v, A.p))


def derivations(A: FiniteAlgebra) -> list[np.ndarray]:
    """Basis of the derivations of A, as n x n matrices acting on coordinate columns."""
    n = A.dim
    return [v.reshape(n, n) for v in modp.nullspace(_leibniz_system(A), A.p)]


def euler_derivation(A: FiniteAlgebra, weights: Sequence[int] | None = None) -> np.ndarray:
    """``sum l_i x_i d/dx_i`` on a monomial or semigroup algebra: e_a -> lambda(a) e_a."""
    if A.grades is None:
        raise InputError("algebra carries no exponent grading")
    w = [1] * len(A.grades[0]) if weights is None else list(weights)
    if len(w) != len(A.grades[0]):
        raise InputError("weight vector of the wrong length")
    degs = [sum(a * b for a, b in zip(w, g)) % A.p for g in A.grades]
    return np.diag(degs).astype(np.int64)


def _skew_blocks(M: FiniteModule) -> tuple[np.ndarray, list[int]]:
    idx = _non_unit(M.algebra)
    m = M.dim
    ops = [_commutator_operator(M.actions[a], M.p) for a in idx]
    return (np.concatenate(ops, axis=0) if ops else np.zeros((0, m * m), dtype=np.int64)), idx


def skew_derivation_solve(M: FiniteModule, D: np.ndarray) -> np.ndarray | None:
    """Some F with ``F X_a - X_a F = X_{D(a)}`` for all a, or None if no such F exists."""
    A, p, m = M.algebra, M.p, M.dim
    D = np.asarray(D, dtype=np.int64) % p
    if D.shape != (A.dim, A.dim):
        raise InputError("derivation matrix has the wrong shape")
    system, idx = _skew_blocks(M)
    if not idx:
        return np.zeros((m, m), dtype=np.int64)
    rhs = np.concatenate([M.action_of(D[:, a]).ravel() for a in idx])
    x = modp.solve(system, rhs, p)
    if x is None:
        return None
    # canonical representative modulo End(M): zero at the echelon pivots of End(M)
    ends = subspace_basis(endomorphism_algebra(M), p, (m, m))
    for row in ends:
        c = int(np.flatnonzero(row)[0])
        x = (x - x[c] * row) % p
    return x.reshape(m, m)


def ks_kernel(M: FiniteModule) -> list[np.ndarray]:
    """Canonical basis of the derivations D admitting a D-skew derivation on M.

    Solved as one homogeneous system in (F, D), then projected to the D part.
    """
    A, p, m, n = M.algebra, M.p, M.dim, M.algebra.dim
    comm, idx = _skew_blocks(M)
    leib = _leibniz_system(A)
    # D-part of the skew equations: -sum_k D[k, a] vec(X_k)
    dcols = np.zeros((len(idx) * m * m, n * n), dtype=np.int64)
    for t, a in enumerate(idx):
        for k in range(n):
            dcols[t * m * m : (t + 1) * m * m, k * n + a] = (-M.actions[k].ravel()) % p
    top = np.concatenate([comm, dcols], axis=1)
    bottom = np.concatenate([np.zeros((leib.shape[0], m * m), dtype=np.int64), leib], axis=1)
    sol = modp.nullspace(np.concatenate([top, bottom], axis=0), p)
    proj = modp.row_space(sol[:, m * m :], p, n * n)
    return [v.reshape(n, n) for v in proj]


def subspace_basis(mats: Sequence[np.ndarray], p: int, shape: tuple[int, int]) -> np.ndarray:
    """Canonical echelon basis of the span of the given matrices (flattened)."""
    size = shape[0] * shape[1]
    if not mats:
        return np.zeros((0, size), dtype=np.int64)
    return modp.row_space(np.array([np.asarray(x).ravel() for x in mats]), p, size)


def intersect_subspaces(U: np.ndarray, V: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the intersection of two row spaces."""
    size = U.shape[1]
    if U.shape[0] == 0 or V.shape[0] == 0:
        return np.zeros((0, size), dtype=np.int64)
    # solve a U = b V
    coeffs = modp.nullspace(np.concatenate([U, (-V) % p], axis=0).T, p)
    vecs = matmul_mod(coeffs[:, : U.shape[0]], U, p) if coeffs.shape[0] else np.zeros((0, size))
    return modp.row_space(vecs, p, size)


def artin_schreier_root(phi: np.ndarray, start: int, p: int) -> tuple[np.ndarray, int]:
    """Iterate ``tau -> tau^p - phi`` from ``start * 1`` until it stops moving.

    Returns the fixed point and the number of steps that changed tau; phi must
    be nilpotent so the successive differences are p-th powers going to zero.
    """
    m = phi.shape[0]
    tau = (start * modp.identity(m)) % p
    steps = 0
    while True:
        nxt = (modp.matpow(tau, p, p) - phi) % p
        if np.array_equal(nxt, tau):
            return tau, steps
        tau = nxt
        steps += 1
        if steps > m:
            raise AssertionError("Artin-Schreier iteration did not stabilize within dim M steps")


def artin_schreier_idempotent(M: FiniteModule, f: np.ndarray) -> np.ndarray:
    """``(f - tau)^(p-1)`` where ``tau^p - tau = f^p - f`` inside Z/p[f^p - f].

    ``f^p - f`` must commute with the module actions and be nilpotent. The
    result is idempotent and commutes with the actions of the Frobenius
    transform of M; it can be 0 or 1 when f - tau is nilpotent or invertible.
    """
    p, m = M.p, M.dim
    f = np.asarray(f, dtype=np.int64) % p
    if f.shape != (m, m):
        raise InputError(f"operator must be {m} x {m}")
    phi = (modp.matpow(f, p, p) - f) % p
    if not _commutes_with(phi, M.actions, p):
        raise InputError("f^p - f is not an endomorphism of the module")
    c = scalar_part(phi, p)
    if c is None:
        raise InputError("f^p - f is not a scalar plus a nilpotent")
    if c:
        raise ArtinSchreierObstruction(f"u^p - u = {c} has no solution in Z/{p}")
    u = scalar_part(f, p)
    tau, _ = artin_schreier_root(phi, 0 if u is None else u, p)
    g = (f - tau) % p
    e = modp.matpow(g, p - 1, p)
    if not _is_idempotent(e, p):
        raise AssertionError("(f - tau)^(p-1) is not idempotent")
    return e


def is_nontrivial_idempotent(e: np.ndarray, p: int) -> bool:
    return _is_idempotent(e, p) and not modp.is_zero(e) and not np.array_equal(e, modp.identity(e.shape[0]))


def commutes_with_actions(e: np.ndarray, M: FiniteModule) -> bool:
    return _commutes_with(np.asarray(e) % M.p, M.actions, M.p)


def module_to_json(M: FiniteModule) -> dict:
    A = M.algebra
    return {
        "p": A.p,
        "algebra": {
            "dim": A.dim,
            "labels": list(A.labels),
            "structure": A.structure.tolist(),
            "unit": A.unit,
            "grades": None if A.grades is None else [list(g) for g in A.grades],
        },
        "dim": M.dim,
        "actions": [X.tolist() for X in M.actions],
    }


def _int_array(obj, shape, name) -> np.ndarray:
    try:
        arr = np.array(obj, dtype=object)
    except (TypeError, ValueError):
        raise InputError(f"{name} is not a rectangular array") from None
    if arr.shape != shape or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in arr.ravel()
    ):
        raise InputError(f"{name} must be an integer array of shape {shape}")
    return arr.astype(np.int64)


def module_from_json(obj) -> FiniteModule:
    if not isinstance(obj, dict):
        raise InputError("module JSON must be an object")
    try:
        p = obj["p"]
        alg = obj["algebra"]
        n = alg["dim"]
        m = obj["dim"]
        structure = alg["structure"]
        unit = alg.get("unit", 0)
        actions = obj["actions"]
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"module JSON missing field {exc}") from None
    check_prime(p)
    for val, name in ((n, "algebra.dim"), (m, "dim"), (unit, "algebra.unit")):
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise InputError(f"{name} must be a nonnegative integer")
    c = _int_array(structure, (n, n, n), "algebra.structure")
    acts = _int_array(actions, (n, m, m), "actions")
    for arr, name in ((c, "structure"), (acts, "actions")):
        if arr.size and (arr.min() < 0 or arr.max() >= p):
            raise InputError(f"{name} entries must lie in [0, p)")
    labels = alg.get("labels") or [f"e{i}" for i in range(n)]
    if len(labels) != n or not all(isinstance(s, str) for s in labels):
        raise InputError("algebra.labels must be n strings")
    grades = alg.get("grades")
    if grades is not None:
        if not isinstance(grades, list) or len(grades) != n or not all(
            isinstance(g, list) and all(isinstance(x, int) for x in g) for g in grades
        ):
            raise InputError("algebra.grades must be n integer lists")
        grades = tuple(tuple(g) for g in grades)
    A = FiniteAlgebra(p, tuple(labels), c, unit, grades)
    return FiniteModule(A, m, tuple(acts))
