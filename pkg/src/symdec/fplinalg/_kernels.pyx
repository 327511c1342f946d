# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for dense F_p linear algebra (int64, entries in [0, p))."""

import numpy as np

BACKEND = "c"


cdef long long _mod_inv(long long x, long long p):
    # Fermat: x^(p-2) mod p, square-and-multiply
    cdef long long result = 1
    cdef long long base = x % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rref_inplace(long long[:, ::1] a, long long p):
    """Reduced row-echelon form in place; returns the pivot column list."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, l, idx
    cdef long long inv, f, v, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        i = -1
        for j in range(r, rows):
            if a[j, c] != 0:
                i = j
                break
        if i == -1:
            continue
        if i != r:
            for l in range(cols):
                tmp = a[r, l]
                a[r, l] = a[i, l]
                a[i, l] = tmp
        inv = _mod_inv(a[r, c], p)
        for j in range(r + 1, rows):
            if a[j, c] != 0:
                f = (a[j, c] * inv) % p
                for l in range(c, cols):
                    v = (a[j, l] - f * a[r, l]) % p
                    if v < 0:
                        v += p
                    a[j, l] = v
        pivots.append(c)
        r += 1
    for idx in range(len(pivots) - 1, -1, -1):
        c = pivots[idx]
        inv = _mod_inv(a[idx, c], p)
        if inv != 1:
            for l in range(c, cols):
                a[idx, l] = (a[idx, l] * inv) % p
        for j in range(idx):
            if a[j, c] != 0:
                f = a[j, c]
                for l in range(c, cols):
                    v = (a[j, l] - f * a[idx, l]) % p
                    if v < 0:
                        v += p
                    a[j, l] = v
    return pivots


def matmul(long long[:, ::1] a, long long[:, ::1] b, long long p):
    """Exact modular product; accumulates in int64 and reduces at the end."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t inner = a.shape[1]
    cdef Py_ssize_t m = b.shape[1]
    out_arr = np.zeros((n, m), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t i, l, j
    cdef long long v
    for i in range(n):
        for l in range(inner):
            v = a[i, l]
            if v != 0:
                for j in range(m):
                    out[i, j] += v * b[l, j]
        for j in range(m):
            out[i, j] %= p
    return out_arr
