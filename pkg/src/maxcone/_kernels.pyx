# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for basis extraction.

Signatures mirror :mod:`maxcone._fallback`; see that module for the
contracts. Matrices arrive column-major (one generator per contiguous
column), point sets arrive row-major (one point per contiguous row).
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, INFINITY

cnp.import_array()


cdef inline double _principal(const double[::1, :] V, Py_ssize_t i,
                              Py_ssize_t j, Py_ssize_t n) noexcept nogil:
    # min over supp(column i) of V[l, j] / V[l, i]
    cdef double x = INFINITY, r, u
    cdef Py_ssize_t l
    for l in range(n):
        u = V[l, i]
        if u > 0:
            r = V[l, j] / u
            if r < x:
                x = r
    return x


def scan_residuation(const double[::1, :] V, double atol):
    cdef Py_ssize_t n = V.shape[0], k = V.shape[1]
    cdef Py_ssize_t i, j, l
    cdef double x, p
    cdef bint exact
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] keep_arr = np.zeros(k, dtype=np.uint8)
    cdef cnp.uint8_t[::1] keep = keep_arr
    cdef double[::1] image = np.zeros(n)

    for i in range(k):
        for l in range(n):
            if V[l, i] > 0:
                keep[i] = 1
                break

    with nogil:
        for j in range(k):
            if not keep[j]:
                continue
            for l in range(n):
                image[l] = 0.0
            for i in range(k):
                if i == j or not keep[i]:
                    continue
                x = _principal(V, i, j, n)
                if x > 0:
                    for l in range(n):
                        p = x * V[l, i]
                        if p > image[l]:
                            image[l] = p
            exact = True
            for l in range(n):
                if fabs(image[l] - V[l, j]) > atol:
                    exact = False
                    break
            if exact:
                keep[j] = 0
    return keep_arr.astype(bool)


def scan_covering(const double[::1, :] V, double atol):
    cdef Py_ssize_t n = V.shape[0], k = V.shape[1]
    cdef Py_ssize_t i, j, l
    cdef double x, u
    cdef bint covered
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] keep_arr = np.zeros(k, dtype=np.uint8)
    cdef cnp.uint8_t[::1] keep = keep_arr
    cdef cnp.uint8_t[::1] hit = np.zeros(n, dtype=np.uint8)

    for i in range(k):
        for l in range(n):
            if V[l, i] > 0:
                keep[i] = 1
                break

    with nogil:
        for j in range(k):
            if not keep[j]:
                continue
            for l in range(n):
                hit[l] = 0
            for i in range(k):
                if i == j or not keep[i]:
                    continue
                x = _principal(V, i, j, n)
                if x == 0:
                    continue
                for l in range(n):
                    u = V[l, i]
                    if u > 0 and fabs(V[l, j] - x * u) <= atol:
                        hit[l] = 1
            covered = True
            for l in range(n):
                if V[l, j] > 0 and not hit[l]:
                    covered = False
                    break
            if covered:
                keep[j] = 0
    return keep_arr.astype(bool)


def minimal_mask(const double[:, ::1] P, const double[::1] atol):
    cdef Py_ssize_t m = P.shape[0], n = P.shape[1]
    cdef Py_ssize_t i, p, l
    cdef double d, a
    cdef bint le, eq
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out_arr = np.ones(m, dtype=np.uint8)
    cdef cnp.uint8_t[::1] out = out_arr

    with nogil:
        for i in range(m):
            a = atol[i]
            for p in range(m):
                if p == i:
                    continue
                le = True
                eq = True
                for l in range(n):
                    d = P[p, l] - P[i, l]
                    if d > a:
                        le = False
                        break
                    if d < -a:
                        eq = False
                if le and not eq:
                    out[i] = 0
                    break
    return out_arr.astype(bool)
