# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pure.py`` (same signatures)."""

from cpython.list cimport PyList_GET_ITEM


def convolve(list ar, list ai, list br, list bi, object d):
    cdef Py_ssize_t n = len(ar)
    cdef Py_ssize_t m = len(br)
    cdef Py_ssize_t k, j, jlo, jhi
    cdef object sr, si, x, y, u, v
    cdef list cr, ci, dbi
    if n == 0 or m == 0:
        return [], []
    cr = [None] * (n + m - 1)
    ci = [None] * (n + m - 1)
    # output-major order: one store per coefficient, sums kept in locals
    if not any(bi):
        for k in range(n + m - 1):
            jlo = k - n + 1 if k >= n else 0
            jhi = k if k < m else m - 1
            sr = 0
            si = 0
            for j in range(jlo, jhi + 1):
                u = <object>PyList_GET_ITEM(br, j)
                if u:
                    sr += <object>PyList_GET_ITEM(ar, k - j) * u
                    si += <object>PyList_GET_ITEM(ai, k - j) * u
            cr[k] = sr
            ci[k] = si
        return cr, ci
    dbi = [d * v for v in bi]
    for k in range(n + m - 1):
        jlo = k - n + 1 if k >= n else 0
        jhi = k if k < m else m - 1
        sr = 0
        si = 0
        for j in range(jlo, jhi + 1):
            x = <object>PyList_GET_ITEM(ar, k - j)
            y = <object>PyList_GET_ITEM(ai, k - j)
            u = <object>PyList_GET_ITEM(br, j)
            sr += x * u + y * <object>PyList_GET_ITEM(dbi, j)
            si += x * <object>PyList_GET_ITEM(bi, j) + y * u
        cr[k] = sr
        ci[k] = si
    return cr, ci


def dot_window(list pr, list pi, list qr, list qi, Py_ssize_t start, object d):
    cdef Py_ssize_t n = len(pr)
    cdef Py_ssize_t k, t
    cdef object sr = 0, si = 0, x, y, u, v
    for k in range(len(qr)):
        t = start + k
        if t < 0 or t >= n:
            continue
        x = <object>PyList_GET_ITEM(pr, t)
        y = <object>PyList_GET_ITEM(pi, t)
        u = <object>PyList_GET_ITEM(qr, k)
        v = <object>PyList_GET_ITEM(qi, k)
        sr += x * u + d * y * v
        si += x * v + y * u
    return sr, si
