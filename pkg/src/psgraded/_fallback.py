"""Pure-Python versions of the compiled kernels in ``_speedups.pyx``.

Same signatures and return types; arithmetic runs on Python ints so there is
no overflow concern, only speed.
"""

import numpy as np


def _to_rows(a, p):
    arr = np.asarray(a, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    return [[int(x) % p for x in row] for row in arr.tolist()]


def matmul_mod(a, b, p):
    A = _to_rows(a, p)
    B = _to_rows(b, p)
    k = len(B)
    m = len(B[0]) if B else np.asarray(b).shape[1]
    if A and len(A[0]) != k:
        raise ValueError("shape mismatch in matmul_mod")
    out = []
    for row in A:
        acc = [0] * m
        for t, x in enumerate(row):
            if x:
                brow = B[t]
                for j in range(m):
                    acc[j] += x * brow[j]
        out.append([v % p for v in acc])
    return np.array(out, dtype=np.int64).reshape(len(A), m)


def rref_mod(a, p):
    """Reduced row echelon form over Z/p; returns (nonzero rows, pivot columns)."""
    W = _to_rows(a, p)
    nrows = len(W)
    ncols = len(W[0]) if W else np.asarray(a).reshape(0, -1).shape[1]
    row = 0
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        piv = next((i for i in range(row, nrows) if W[i][col]), None)
        if piv is None:
            continue
        W[row], W[piv] = W[piv], W[row]
        inv = pow(W[row][col], -1, p)
        prow = [(x * inv) % p for x in W[row]]
        W[row] = prow
        for i in range(nrows):
            if i != row and W[i][col]:
                f = W[i][col]
                W[i] = [(x - f * y) % p for x, y in zip(W[i], prow)]
        pivots.append(col)
        row += 1
    return np.array(W[:row], dtype=np.int64).reshape(row, ncols), tuple(pivots)


def _small_binom(n, k, p):
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def binom_mod(n, k, p):
    """C(n, k) mod p for n >= 0 by Lucas's theorem."""
    if n < 0:
        raise ValueError("binom_mod needs n >= 0")
    if k < 0 or k > n:
        return 0
    res = 1
    while k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        res = res * _small_binom(ni, ki, p) % p
        n //= p
        k //= p
    return res


def gen_binom_mod_array(z, d, p):
    """Generalized C(z_i, d) mod p for every entry, negation rule for z_i < 0."""
    if d < 0:
        raise ValueError("lower argument must be nonnegative")
    out = []
    for zi in np.asarray(z, dtype=np.int64).tolist():
        if zi >= 0:
            out.append(binom_mod(zi, d, p))
        else:
            v = binom_mod(-zi + d - 1, d, p)
            out.append((-v) % p if d % 2 else v)
    return np.array(out, dtype=np.int64)
