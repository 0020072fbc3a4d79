import random

import pytest

from metafix import _termops_py

try:
    from metafix import _termops_c
except ImportError:
    _termops_c = None

needs_c = pytest.mark.skipif(_termops_c is None, reason="compiled kernel not built")


def random_terms(rng, n, size):
    out = {}
    for _ in range(size):
        mono = tuple(rng.randint(-3, 3) for _ in range(n))
        c = rng.randint(-9, 9)
        if c:
            out[mono] = c
    return out


@needs_c
def test_backends_agree_on_arithmetic():
    rng = random.Random(71)
    for _ in range(200):
        n = rng.randrange(1, 5)
        a = random_terms(rng, n, rng.randrange(1, 12))
        b = random_terms(rng, n, rng.randrange(1, 12))
        assert _termops_py.tm_add(a, b) == _termops_c.tm_add(a, b)
        assert _termops_py.tm_sub(a, b) == _termops_c.tm_sub(a, b)
        assert _termops_py.tm_neg(a) == _termops_c.tm_neg(a)
        assert _termops_py.tm_mul(a, b) == _termops_c.tm_mul(a, b)
        c = rng.randint(-5, 5)
        assert _termops_py.tm_scale(a, c) == _termops_c.tm_scale(a, c)
        mono = tuple(rng.randint(-2, 2) for _ in range(n))
        assert _termops_py.tm_mul_term(a, mono, c) == _termops_c.tm_mul_term(a, mono, c)


@needs_c
def test_backends_agree_on_word_pass():
    rng = random.Random(72)
    for _ in range(100):
        n = rng.randrange(2, 5)
        letters = tuple(
            rng.choice([1, -1]) * rng.randrange(1, n + 1) for _ in range(rng.randrange(40))
        )
        assert _termops_py.word_coords(letters, n) == _termops_c.word_coords(letters, n)


@needs_c
def test_big_coefficients_stay_exact():
    big = 10**40
    a = {(1, 0): big, (0, 1): -big}
    b = {(1, 0): big}
    assert _termops_c.tm_mul(a, b) == _termops_py.tm_mul(a, b)
    assert _termops_c.tm_mul(a, b)[(2, 0)] == big * big


def test_selected_backend_reports_name():
    from metafix._backend import backend_name

    assert backend_name() in ("c", "python")
