"""Dense linear algebra over Z/p on int64 arrays, built on the kernel backend."""

from __future__ import annotations

import numpy as np

from .kernels import matmul_mod, rref_mod


def as_mod(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = as_mod(a, p)
    while e:
        if e & 1:
            result = matmul_mod(result, base, p)
        base = matmul_mod(base, base, p)
        e >>= 1
    return result


def rank(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    return len(rref_mod(a, p)[1])


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning ``{x : a @ x == 0}``, one per free column, in canonical order."""
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return identity(ncols)
    R, pivots = rref_mod(a, p)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for t, j in enumerate(free):
        out[t, j] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = (-R[i, j]) % p
    return out


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of ``a @ x == b`` (free variables set to zero), or None."""
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    aug = np.concatenate([a, np.asarray(b, dtype=np.int64).reshape(-1, 1)], axis=1)
    R, pivots = rref_mod(aug, p)
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, ncols]
    return x


def row_space(vectors, p: int, ncols: int) -> np.ndarray:
    """Canonical basis (reduced echelon rows) of the span of the given vectors."""
    v = np.asarray(vectors, dtype=np.int64).reshape(-1, ncols)
    if v.shape[0] == 0:
        return v
    return rref_mod(v, p)[0]


def inverse(a: np.ndarray, p: int) -> np.ndarray | None:
    n = a.shape[0]
    R, pivots = rref_mod(np.concatenate([as_mod(a, p), identity(n)], axis=1), p)
    if pivots[:n] != tuple(range(n)):
        return None
    return R[:, n:]


def column_space(a: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the image of a, as an (n, k) array."""
    return row_space(np.asarray(a).T, p, a.shape[0]).T


def is_zero(a: np.ndarray) -> bool:
    return not np.any(a)
