#!/usr/bin/env python3
"""Benchmark the compiled term kernel against the pure-Python twin.

Times the two hot kernels (term-map convolution, word-coordinate pass) on
identical inputs, then an end-to-end determinant workload through the
public API in subprocesses (METAFIX_PURE_PYTHON toggles the backend).

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from metafix import _termops_py

try:
    from metafix import _termops_c
except ImportError:
    _termops_c = None


def random_terms(rng, n, size, span=4, coeff=9):
    out = {}
    while len(out) < size:
        mono = tuple(rng.randint(-span, span) for _ in range(n))
        out[mono] = rng.randint(1, coeff)
    return out


def random_letters(rng, n, length):
    return tuple(
        rng.randrange(1, n + 1) * (1 if rng.random() < 0.5 else -1)
        for _ in range(length)
    )


def time_call(fn, args, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_kernels(repeat):
    rng = random.Random(42)
    cases = [
        ("tm_mul 30x30 terms, 3 vars", "tm_mul",
         (random_terms(rng, 3, 30), random_terms(rng, 3, 30))),
        ("tm_mul 120x120 terms, 3 vars", "tm_mul",
         (random_terms(rng, 3, 120), random_terms(rng, 3, 120))),
        ("tm_add 200+200 terms, 4 vars", "tm_add",
         (random_terms(rng, 4, 200), random_terms(rng, 4, 200))),
        ("word_coords 20k letters, 4 gens", "word_coords",
         (random_letters(rng, 4, 20000), 4)),
    ]
    print(f"{'kernel':38s} {'python':>10s} {'c':>10s} {'speedup':>8s}")
    for label, name, args in cases:
        tp = time_call(getattr(_termops_py, name), args, repeat)
        if _termops_c is None:
            print(f"{label:38s} {tp * 1e3:9.3f}ms {'n/a':>10s}")
            continue
        tc = time_call(getattr(_termops_c, name), args, repeat)
        out_p = getattr(_termops_py, name)(*args)
        out_c = getattr(_termops_c, name)(*args)
        assert out_p == out_c, f"backend mismatch in {name}"
        print(f"{label:38s} {tp * 1e3:9.3f}ms {tc * 1e3:9.3f}ms {tp / tc:7.2f}x")


END_TO_END = r"""
import random, time
from metafix.laurent import LaurentPoly
from metafix.matrices import LaurentMatrix
from metafix._backend import backend_name

rng = random.Random(7)
n = 3
def rp():
    t = {}
    for _ in range(6):
        t[tuple(rng.randint(-2, 2) for _ in range(n))] = rng.randint(-4, 4)
    return LaurentPoly(n, t)

mats = [LaurentMatrix(n, [[rp() for _ in range(4)] for _ in range(4)]) for _ in range(12)]
t0 = time.perf_counter()
for m in mats:
    m.det()
    m.rank()
print(f"{backend_name()} end-to-end 4x4 det+rank x12: {time.perf_counter()-t0:.3f}s")
"""


def bench_end_to_end():
    for pure in ("", "1"):
        env = dict(os.environ)
        env.pop("METAFIX_PURE_PYTHON", None)
        if pure:
            env["METAFIX_PURE_PYTHON"] = pure
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _termops_c is None:
        print("compiled kernel not available; showing pure-Python timings only")
    bench_kernels(args.repeat)
    print()
    bench_end_to_end()


if __name__ == "__main__":
    main()
