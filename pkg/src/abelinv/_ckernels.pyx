# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contract as ``abelinv._pykernels``."""

from libc.stdlib cimport malloc, free


cdef int _bits(list xs):
    cdef int best = 0
    cdef int b
    for v in xs:
        b = abs(v).bit_length()
        if b > best:
            best = b
    return best


def convolve(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef Py_ssize_t lb = min(len(b), n + 1)
    cdef Py_ssize_t i, j
    cdef long long *ca
    cdef long long *cb
    cdef long long *co
    cdef long long ai
    cdef list out
    cdef object ao
    # fast path: every partial sum provably fits in a signed 64-bit word
    if _bits(a) + _bits(b) + (n + 1).bit_length() < 62:
        ca = <long long *> malloc(la * sizeof(long long))
        cb = <long long *> malloc(lb * sizeof(long long))
        co = <long long *> malloc((n + 1) * sizeof(long long))
        if ca == NULL or cb == NULL or co == NULL:
            free(ca)
            free(cb)
            free(co)
            raise MemoryError()
        try:
            for i in range(la):
                ca[i] = a[i]
            for j in range(lb):
                cb[j] = b[j]
            for i in range(n + 1):
                co[i] = 0
            for i in range(la):
                ai = ca[i]
                if ai == 0:
                    continue
                for j in range(min(lb, n + 1 - i)):
                    co[i + j] += ai * cb[j]
            return [co[i] for i in range(n + 1)]
        finally:
            free(ca)
            free(cb)
            free(co)
    out = [0] * (n + 1)
    for i in range(la):
        ao = a[i]
        if not ao:
            continue
        for j in range(min(lb, n + 1 - i)):
            out[i + j] = out[i + j] + ao * b[j]
    return out


def quotient(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t k, i
    cdef object b0 = b[0]
    cdef object acc, bk
    cdef list powers
    cdef list p = []
    if b0 == 0:
        raise ZeroDivisionError("series quotient with zero constant term")
    powers = [1] * (n + 1)
    for k in range(1, n + 1):
        powers[k] = powers[k - 1] * b0
    for k in range(n + 1):
        acc = a[k] * powers[k]
        for i in range(k):
            bk = b[k - i]
            if bk:
                acc = acc - p[i] * powers[k - 1 - i] * bk
        p.append(acc)
    return p
