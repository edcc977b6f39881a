# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over finite group tables. Same contracts as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp


def twisted_class_labels(product, inverse, phi):
    cdef int[:, ::1] P = np.ascontiguousarray(product, dtype=np.intc)
    cdef int[::1] inv = np.ascontiguousarray(inverse, dtype=np.intc)
    cdef int[::1] ph = np.ascontiguousarray(phi, dtype=np.intc)
    cdef Py_ssize_t n = P.shape[0]
    cdef int[::1] labels = np.full(n, -1, dtype=np.intc)
    cdef Py_ssize_t x, a
    cdef int y
    for x in range(n):
        if labels[x] >= 0:
            continue
        for a in range(n):
            y = P[P[ph[a], x], inv[a]]
            if labels[y] < 0:
                labels[y] = <int>x
    return [int(v) for v in labels]


def is_associative(product):
    cdef int[:, ::1] P = np.ascontiguousarray(product, dtype=np.intc)
    cdef Py_ssize_t n = P.shape[0]
    cdef Py_ssize_t a, b, c
    cdef int ab
    for a in range(n):
        for b in range(n):
            ab = P[a, b]
            for c in range(n):
                if P[ab, c] != P[a, P[b, c]]:
                    return False
    return True


def grmat_mul(A, B, product):
    """Dense int64 product; the caller guarantees no overflow."""
    cdef long long[:, :, ::1] a = np.ascontiguousarray(A, dtype=np.int64)
    cdef long long[:, :, ::1] b = np.ascontiguousarray(B, dtype=np.int64)
    cdef int[:, ::1] P = np.ascontiguousarray(product, dtype=np.intc)
    cdef Py_ssize_t n = a.shape[0], k = a.shape[1], m = b.shape[1], order = P.shape[0]
    out_arr = np.zeros((n, m, order), dtype=np.int64)
    cdef long long[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, t, j, g, h
    cdef long long c
    for i in range(n):
        for t in range(k):
            for g in range(order):
                c = a[i, t, g]
                if c == 0:
                    continue
                for j in range(m):
                    for h in range(order):
                        if b[t, j, h] != 0:
                            out[i, j, P[g, h]] += c * b[t, j, h]
    return out_arr.tolist()
