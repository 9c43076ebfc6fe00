# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled periodized two-channel filter bank.

Same contract as ``_pykernels``: filtering along the last axis of a
C-contiguous float64 2-D array with an even last dimension.
"""

import numpy as np


def analysis(const double[:, ::1] x, const double[::1] lo, const double[::1] hi):
    cdef Py_ssize_t rows = x.shape[0], n = x.shape[1], half = n // 2
    cdef Py_ssize_t length = lo.shape[0], shift = length // 2 - 1
    cdef Py_ssize_t r, k, i, j
    cdef double acc_a, acc_d, v
    approx_arr = np.empty((rows, half))
    detail_arr = np.empty((rows, half))
    cdef double[:, ::1] approx = approx_arr
    cdef double[:, ::1] detail = detail_arr
    for r in range(rows):
        for k in range(half):
            acc_a = 0.0
            acc_d = 0.0
            j = (2 * k - shift) % n
            if j < 0:
                j += n
            for i in range(length):
                v = x[r, j]
                acc_a += lo[i] * v
                acc_d += hi[i] * v
                j += 1
                if j == n:
                    j = 0
            approx[r, k] = acc_a
            detail[r, k] = acc_d
    return approx_arr, detail_arr


def synthesis(const double[:, ::1] approx, const double[:, ::1] detail,
              const double[::1] lo, const double[::1] hi):
    cdef Py_ssize_t rows = approx.shape[0], half = approx.shape[1], n = 2 * half
    cdef Py_ssize_t length = lo.shape[0], shift = length // 2 - 1
    cdef Py_ssize_t r, k, i, j
    cdef double a, d
    out_arr = np.zeros((rows, n))
    cdef double[:, ::1] out = out_arr
    for r in range(rows):
        for k in range(half):
            a = approx[r, k]
            d = detail[r, k]
            j = (2 * k - shift) % n
            if j < 0:
                j += n
            for i in range(length):
                out[r, j] += lo[i] * a + hi[i] * d
                j += 1
                if j == n:
                    j = 0
    return out_arr
