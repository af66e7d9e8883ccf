# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled dense polynomial kernels (schoolbook, exact).

Same contract as ``qfish._kernels``.  Operands whose coefficients and
accumulated products provably fit in 64 bits are multiplied on C arrays;
anything larger falls back to PyObject arithmetic, still driven by C loops.
"""

from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from cpython.long cimport PyLong_AsLongLongAndOverflow, PyLong_FromLongLong
from libc.stdlib cimport free, malloc

cdef long long _LLONG_MIN = <long long>(-9223372036854775807LL - 1)

# max_a * max_b * overlap must stay below this for the int64 path
_FAST_BOUND = 1 << 62


cdef int _fill(list xs, long long* buf, long long* maxabs):
    """Copy ints into a C buffer; return 0 if any element overflows int64."""
    cdef Py_ssize_t i, n = PyList_GET_SIZE(xs)
    cdef int overflow
    cdef long long v, m = 0
    for i in range(n):
        v = PyLong_AsLongLongAndOverflow(<object>PyList_GET_ITEM(xs, i), &overflow)
        if overflow or v == _LLONG_MIN:
            return 0
        buf[i] = v
        if v < 0:
            v = -v
        if v > m:
            m = v
    maxabs[0] = m
    return 1


cdef list _mul_fast(long long* pa, Py_ssize_t la, long long* pb, Py_ssize_t lb,
                    Py_ssize_t n):
    cdef long long* out = <long long*>malloc(n * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, jmax
    cdef long long ai
    for i in range(n):
        out[i] = 0
    try:
        for i in range(min(la, n)):
            ai = pa[i]
            if ai != 0:
                jmax = lb
                if n - i < jmax:
                    jmax = n - i
                for j in range(jmax):
                    out[i + j] += ai * pb[j]
        return [PyLong_FromLongLong(out[i]) for i in range(n)]
    finally:
        free(out)


cdef list _mul_obj(list a, Py_ssize_t la, list b, Py_ssize_t lb, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i, j, jmax
    for i in range(min(la, n)):
        ai = <object>PyList_GET_ITEM(a, i)
        if ai:
            jmax = lb
            if n - i < jmax:
                jmax = n - i
            for j in range(jmax):
                bj = <object>PyList_GET_ITEM(b, j)
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


cdef list _mul_impl(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = PyList_GET_SIZE(a)
    cdef Py_ssize_t lb = PyList_GET_SIZE(b)
    if la == 0 or lb == 0 or n <= 0:
        return []
    if la + lb - 1 < n:
        n = la + lb - 1
    cdef long long* pa = <long long*>malloc(la * sizeof(long long))
    cdef long long* pb = NULL
    cdef long long ma = 0, mb = 0
    cdef Py_ssize_t overlap
    cdef list res
    if pa == NULL:
        raise MemoryError()
    try:
        if _fill(a, pa, &ma):
            pb = <long long*>malloc(lb * sizeof(long long))
            if pb == NULL:
                raise MemoryError()
            if _fill(b, pb, &mb):
                overlap = la if la < lb else lb
                if ma == 0 or mb == 0:
                    return [0] * n
                # bound computed with Python ints, cannot overflow
                if int(ma) * int(mb) * int(overlap) < _FAST_BOUND:
                    res = _mul_fast(pa, la, pb, lb, n)
                    return res
        return _mul_obj(a, la, b, lb, n)
    finally:
        free(pa)
        if pb != NULL:
            free(pb)


def mul(list a, list b):
    """Full product of two coefficient vectors."""
    cdef Py_ssize_t la = PyList_GET_SIZE(a)
    cdef Py_ssize_t lb = PyList_GET_SIZE(b)
    if la == 0 or lb == 0:
        return []
    return _mul_impl(a, b, la + lb - 1)


def mul_trunc(list a, list b, n):
    """First ``n`` coefficients of ``a * b`` (result length <= n)."""
    return _mul_impl(a, b, n)
