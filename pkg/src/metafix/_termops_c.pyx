# cython: language_level=3
"""Compiled term-map kernel; mirrors `_termops_py` exactly.

Coefficients stay arbitrary-precision Python ints; the win comes from
typed loops and avoiding interpreter dispatch in the convolution and in
the word-coordinate pass.
"""


def tm_add(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, c
    for k, v in b.items():
        c = out.get(k)
        if c is None:
            out[k] = v
        else:
            c = c + v
            if c:
                out[k] = c
            else:
                del out[k]
    return out


def tm_sub(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, v, c
    for k, v in b.items():
        c = out.get(k)
        if c is None:
            out[k] = -v
        else:
            c = c - v
            if c:
                out[k] = c
            else:
                del out[k]
    return out


def tm_neg(dict a):
    cdef dict out = {}
    cdef object k, v
    for k, v in a.items():
        out[k] = -v
    return out


def tm_scale(dict a, c):
    cdef dict out = {}
    cdef object k, v
    if not c:
        return out
    for k, v in a.items():
        out[k] = v * c
    return out


def tm_mul_term(dict a, tuple mono, coeff):
    cdef dict out = {}
    cdef Py_ssize_t n = len(mono), i
    cdef tuple k, key
    cdef object v
    cdef list tmp
    if not coeff:
        return out
    for k, v in a.items():
        tmp = [None] * n
        for i in range(n):
            tmp[i] = k[i] + mono[i]
        out[tuple(tmp)] = v * coeff
    return out


def tm_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, key
    cdef object va, vb, c
    cdef Py_ssize_t n, i
    cdef list tmp
    if not a or not b:
        return out
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        for ka, va in a.items():
            return tm_mul_term(b, ka, va)
    for ka, va in a.items():
        n = len(ka)
        for kb, vb in b.items():
            tmp = [None] * n
            for i in range(n):
                tmp[i] = ka[i] + kb[i]
            key = tuple(tmp)
            c = out.get(key)
            if c is None:
                out[key] = va * vb
            else:
                c = c + va * vb
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def word_coords(letters, Py_ssize_t n):
    cdef list acc = [0] * n
    cdef list coords = []
    cdef Py_ssize_t i, idx
    cdef long L
    cdef tuple key
    cdef dict d
    cdef object c
    for i in range(n):
        coords.append({})
    for L in letters:
        if L > 0:
            idx = L - 1
            key = tuple(acc)
            d = <dict>coords[idx]
            c = d.get(key)
            if c is None:
                d[key] = 1
            else:
                c = c + 1
                if c:
                    d[key] = c
                else:
                    del d[key]
            acc[idx] = acc[idx] + 1
        else:
            idx = -L - 1
            acc[idx] = acc[idx] - 1
            key = tuple(acc)
            d = <dict>coords[idx]
            c = d.get(key)
            if c is None:
                d[key] = -1
            else:
                c = c - 1
                if c:
                    d[key] = c
                else:
                    del d[key]
    return acc, coords
