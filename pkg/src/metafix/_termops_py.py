"""Pure-Python term-map kernel.

A term map is a dict from exponent tuples to nonzero integer coefficients;
the zero polynomial is the empty dict.  These functions are the hot inner
loops of the whole package; `_termops_c.pyx` is a compiled twin with the
same signatures, selected at import by `_backend`.
"""


def tm_add(a, b):
    out = dict(a)
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


def tm_sub(a, b):
    out = dict(a)
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


def tm_neg(a):
    return {k: -v for k, v in a.items()}


def tm_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def tm_mul_term(a, mono, coeff):
    """Multiply by the single term coeff * x^mono."""
    if not coeff:
        return {}
    n = len(mono)
    out = {}
    for k, v in a.items():
        out[tuple([k[i] + mono[i] for i in range(n)])] = v * coeff
    return out


def tm_mul(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        for k, v in a.items():
            return tm_mul_term(b, k, v)
    out = {}
    for ka, va in a.items():
        n = len(ka)
        for kb, vb in b.items():
            key = tuple([ka[i] + kb[i] for i in range(n)])
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


def word_coords(letters, n):
    """One left-to-right pass computing all abelianized derivative maps.

    `letters` is a sequence of signed 1-based generator indices.  Returns
    (exponent_sums, coords) where coords[i] is the term map of the i-th
    derivative of the word.
    """
    acc = [0] * n
    coords = [{} for _ in range(n)]
    for L in letters:
        if L > 0:
            i = L - 1
            key = tuple(acc)
            d = coords[i]
            c = d.get(key, 0) + 1
            if c:
                d[key] = c
            else:
                del d[key]
            acc[i] += 1
        else:
            i = -L - 1
            acc[i] -= 1
            key = tuple(acc)
            d = coords[i]
            c = d.get(key, 0) - 1
            if c:
                d[key] = c
            else:
                del d[key]
    return acc, coords
