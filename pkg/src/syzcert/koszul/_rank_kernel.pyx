# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled row reduction over F_p for dense int64 blocks (p < 2**31)."""

from libc.stdint cimport int64_t


cdef int64_t _inverse(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, new_t = 1, r = p, new_r = a, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if t < 0:
        t += p
    return t


def rank_dense_modp(int64_t[:, ::1] A, int64_t p):
    """Rank over F_p of ``A`` (entries already reduced into ``[0, p)``); ``A`` is destroyed."""
    cdef Py_ssize_t m = A.shape[0], n = A.shape[1]
    cdef Py_ssize_t r = 0, c, i, k, piv
    cdef int64_t inv, f, tmp
    with nogil:
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(c, n):
                    tmp = A[r, k]
                    A[r, k] = A[piv, k]
                    A[piv, k] = tmp
            inv = _inverse(A[r, c], p)
            for k in range(c, n):
                A[r, k] = (A[r, k] * inv) % p
            for i in range(r + 1, m):
                f = A[i, c]
                if f != 0:
                    f = p - f
                    for k in range(c, n):
                        A[i, k] = (A[i, k] + f * A[r, k]) % p
            r += 1
    return r
