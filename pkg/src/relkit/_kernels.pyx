# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled closure kernels: boolean and min-plus matmul and Floyd-Warshall.

Semantics are pinned to the numpy fallback in ``_kernels_fallback`` and
checked bit-for-bit by the test suite.  The boolean kernels exploit early
exit on zero pivots; the tropical ones skip infinite pivots.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"

cdef double INF = float("inf")


def bool_matmul(a_in, b_in):
    """Boolean (OR/AND) matrix product of two uint8 0/1 matrices."""
    a_arr = np.ascontiguousarray(a_in, dtype=np.uint8)
    b_arr = np.ascontiguousarray(b_in, dtype=np.uint8)
    out = np.zeros_like(a_arr)
    cdef cnp.uint8_t[:, ::1] a = a_arr
    cdef cnp.uint8_t[:, ::1] b = b_arr
    cdef cnp.uint8_t[:, ::1] c = out
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    for i in range(n):
        for k in range(n):
            if a[i, k]:
                for j in range(n):
                    if b[k, j]:
                        c[i, j] = 1
    return out


def bool_closure(a_in, bint reflexive):
    """Floyd-Warshall reachability closure of a uint8 0/1 matrix."""
    out = np.ascontiguousarray(a_in, dtype=np.uint8).copy()
    cdef cnp.uint8_t[:, ::1] c = out
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t i, j, k
    for k in range(n):
        for i in range(n):
            if c[i, k]:
                for j in range(n):
                    if c[k, j]:
                        c[i, j] = 1
    if reflexive:
        for i in range(n):
            c[i, i] = 1
    return out


def trop_matmul(a_in, b_in):
    """Min-plus matrix product of two float64 matrices (inf = no edge)."""
    a_arr = np.ascontiguousarray(a_in, dtype=np.float64)
    b_arr = np.ascontiguousarray(b_in, dtype=np.float64)
    out = np.full_like(a_arr, INF)
    cdef double[:, ::1] a = a_arr
    cdef double[:, ::1] b = b_arr
    cdef double[:, ::1] c = out
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double aik, v
    for i in range(n):
        for k in range(n):
            aik = a[i, k]
            if aik == INF:
                continue
            for j in range(n):
                v = aik + b[k, j]
                if v < c[i, j]:
                    c[i, j] = v
    return out


def trop_closure(a_in, bint reflexive):
    """Floyd-Warshall min-plus closure of a float64 matrix."""
    out = np.ascontiguousarray(a_in, dtype=np.float64).copy()
    cdef double[:, ::1] c = out
    cdef Py_ssize_t n = c.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double cik, v
    for k in range(n):
        for i in range(n):
            cik = c[i, k]
            if cik == INF:
                continue
            for j in range(n):
                v = cik + c[k, j]
                if v < c[i, j]:
                    c[i, j] = v
    if reflexive:
        for i in range(n):
            if c[i, i] > 0.0:
                c[i, i] = 0.0
    return out
