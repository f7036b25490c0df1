# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for prime-field linear algebra and binomial reduction.

Entries are int64 residues in [0, p) with p < 2**31, so a single product
fits in 63 bits and every accumulation is reduced immediately.
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64

cnp.import_array()


cdef inline i64 _mod(i64 a, i64 p) nogil:
    cdef i64 r = a % p
    if r < 0:
        r += p
    return r


cdef i64 _inv(i64 a, i64 p) nogil:
    cdef i64 t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    return _mod(t, p)


def matmul_mod(a, b, i64 p):
    cdef i64[:, ::1] A = np.ascontiguousarray(a, dtype=np.int64) % p
    cdef i64[:, ::1] B = np.ascontiguousarray(b, dtype=np.int64) % p
    cdef Py_ssize_t n = A.shape[0], k = A.shape[1], m = B.shape[1]
    if B.shape[0] != k:
        raise ValueError("shape mismatch in matmul_mod")
    out = np.zeros((n, m), dtype=np.int64)
    cdef i64[:, ::1] C = out
    cdef Py_ssize_t i, j, t
    cdef i64 acc, x
    with nogil:
        for i in range(n):
            for t in range(k):
                x = A[i, t]
                if x == 0:
                    continue
                for j in range(m):
                    C[i, j] = (C[i, j] + x * B[t, j]) % p
    return out


def rref_mod(a, i64 p):
    """Reduced row echelon form over Z/p; returns (nonzero rows, pivot columns)."""
    work = np.array(a, dtype=np.int64, copy=True, ndmin=2) % p
    cdef i64[:, ::1] W = np.ascontiguousarray(work)
    cdef Py_ssize_t nrows = W.shape[0], ncols = W.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, piv
    cdef i64 inv, factor, tmp
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for i in range(row, nrows):
            if W[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(ncols):
                tmp = W[row, j]
                W[row, j] = W[piv, j]
                W[piv, j] = tmp
        inv = _inv(W[row, col], p)
        with nogil:
            for j in range(col, ncols):
                W[row, j] = (W[row, j] * inv) % p
            for i in range(nrows):
                if i == row:
                    continue
                factor = W[i, col]
                if factor == 0:
                    continue
                for j in range(col, ncols):
                    W[i, j] = _mod(W[i, j] - factor * W[row, j], p)
        pivots.append(col)
        row += 1
    return np.asarray(W)[:row].copy(), tuple(pivots)


cdef i64 _small_binom(i64 n, i64 k, i64 p) nogil:
    # n, k < p, so every factor is invertible
    cdef i64 num = 1, den = 1, i
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    for i in range(k):
        num = (num * ((n - i) % p)) % p
        den = (den * ((i + 1) % p)) % p
    return (num * _inv(den, p)) % p


cdef i64 _lucas(i64 n, i64 k, i64 p) nogil:
    cdef i64 res = 1, ni, ki
    if k < 0 or k > n:
        return 0
    while k > 0:
        ni = n % p
        ki = k % p
        if ki > ni:
            return 0
        res = (res * _small_binom(ni, ki, p)) % p
        n //= p
        k //= p
    return res


def binom_mod(i64 n, i64 k, i64 p):
    """C(n, k) mod p for n >= 0 by Lucas's theorem."""
    if n < 0:
        raise ValueError("binom_mod needs n >= 0")
    return _lucas(n, k, p)


def gen_binom_mod_array(z, i64 d, i64 p):
    """Generalized C(z_i, d) mod p for every entry, negation rule for z_i < 0."""
    cdef i64[::1] Z = np.ascontiguousarray(z, dtype=np.int64)
    cdef Py_ssize_t n = Z.shape[0], i
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] O = out
    cdef i64 zi, v
    if d < 0:
        raise ValueError("lower argument must be nonnegative")
    with nogil:
        for i in range(n):
            zi = Z[i]
            if zi >= 0:
                O[i] = _lucas(zi, d, p)
            else:
                v = _lucas(-zi + d - 1, d, p)
                if d % 2 == 1 and v != 0:
                    v = p - v
                O[i] = v
    return out
