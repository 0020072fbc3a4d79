import os

from setuptools import setup

# The compiled term-arithmetic kernel is optional: without Cython (or with
# METAFIX_NO_EXT=1) the package falls back to the pure-Python twin at import.
ext_modules = []
if not os.environ.get("METAFIX_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/metafix/_termops_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
