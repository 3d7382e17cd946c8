# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Signatures mirror ``_kernels_py``."""

import numpy as np

from libc.stdint cimport int64_t


def power_table(long long poly, int n):
    cdef int64_t q = (<int64_t>1) << n
    out = np.empty(q, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t v = 1
    cdef int64_t k
    for k in range(q):
        o[k] = v
        v <<= 1
        if v & q:
            v ^= poly
    return out


def linear_table(images, int n):
    cdef int64_t q = (<int64_t>1) << n
    out = np.zeros(q, dtype=np.int64)
    cdef int64_t[::1] o = out
    cdef int64_t w, x, img
    cdef int j
    for j in range(n):
        w = (<int64_t>1) << j
        img = int(images[j])
        for x in range(w):
            o[w + x] = o[x] ^ img
    return out


cdef void _fwht_row(double complex[::1] r) noexcept nogil:
    cdef Py_ssize_t size = r.shape[0]
    cdef Py_ssize_t h = 1, i, j
    cdef double complex x, y
    while h < size:
        i = 0
        while i < size:
            for j in range(i, i + h):
                x = r[j]
                y = r[j + h]
                r[j] = x + y
                r[j + h] = x - y
            i += 2 * h
        h *= 2


def fwht(a):
    cdef double complex[:, ::1] m = a
    cdef Py_ssize_t rows = m.shape[0], k
    with nogil:
        for k in range(rows):
            _fwht_row(m[k])
    return a


def displacement_amplitudes(bra, ket):
    cdef double complex[::1] b = np.ascontiguousarray(bra, dtype=np.complex128)
    cdef double complex[::1] kt = np.ascontiguousarray(ket, dtype=np.complex128)
    cdef Py_ssize_t size = b.shape[0], d, l
    w = np.empty((size, size), dtype=np.complex128)
    cdef double complex[:, ::1] m = w
    with nogil:
        for d in range(size):
            for l in range(size):
                m[d, l] = b[l].conjugate() * kt[l ^ d]
            _fwht_row(m[d])
    return np.ascontiguousarray(w.T)
