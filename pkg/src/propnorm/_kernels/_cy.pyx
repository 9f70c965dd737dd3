# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the pairwise/grid kernels.

Mirrors _py.py exactly: condensed pairwise output in lexicographic
(i < j) order, NaN marking undefined values.
"""

import numpy as np

from libc.math cimport NAN, fmax, fmin, pow, sqrt

cdef int JACCARD = 0
cdef int INTERIORITY = 1
cdef int COINCIDENCE = 2
cdef int MJACCARD = 3
cdef int EUCLIDEAN = 4


cdef inline double _index_value(const double* a, const double* b, Py_ssize_t m,
                                int kind, double d, double e) noexcept nogil:
    cdef Py_ssize_t k
    cdef double pa, na, pb, nb
    cdef double num = 0.0, den = 0.0, total_a = 0.0, total_b = 0.0
    cdef double term_sum = 0.0, term_den, acc = 0.0
    cdef double jaccard, interiority

    if kind == EUCLIDEAN:
        for k in range(m):
            acc += (a[k] - b[k]) * (a[k] - b[k])
        return sqrt(acc)

    for k in range(m):
        pa = a[k] if a[k] > 0.0 else 0.0
        na = -a[k] if a[k] < 0.0 else 0.0
        pb = b[k] if b[k] > 0.0 else 0.0
        nb = -b[k] if b[k] < 0.0 else 0.0
        if kind == MJACCARD:
            term_den = fmax(pa, pb) + fmax(na, nb)
            term_sum += 1.0 if term_den == 0.0 else (fmin(pa, pb) + fmin(na, nb)) / term_den
        else:
            num += fmin(pa, pb) + fmin(na, nb)
            den += fmax(pa, pb) + fmax(na, nb)
            total_a += pa + na
            total_b += pb + nb

    if kind == MJACCARD:
        return pow(term_sum / m, d)
    if kind == JACCARD:
        return 1.0 if den == 0.0 else num / den
    if total_a == 0.0 or total_b == 0.0:
        return NAN
    interiority = num / fmin(total_a, total_b)
    if kind == INTERIORITY:
        return interiority
    jaccard = 1.0 if den == 0.0 else num / den
    return pow(jaccard, d) * pow(interiority, e)


def pairwise(const double[:, ::1] X, int kind, double d, double e):
    cdef Py_ssize_t n = X.shape[0]
    cdef Py_ssize_t m = X.shape[1]
    out_arr = np.empty(n * (n - 1) // 2, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j, cursor = 0
    with nogil:
        for i in range(n - 1):
            for j in range(i + 1, n):
                out[cursor] = _index_value(&X[i, 0], &X[j, 0], m, kind, d, e)
                cursor += 1
    return out_arr


def one_to_many(const double[::1] ref, const double[:, ::1] points,
                int kind, double d, double e):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t m = points.shape[1]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t j
    with nogil:
        for j in range(n):
            out[j] = _index_value(&ref[0], &points[j, 0], m, kind, d, e)
    return out_arr
