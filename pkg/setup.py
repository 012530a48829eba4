"""Build script for the optional compiled elimination kernel.

The package works without the extension (a pure-Python fallback is
selected at import time); the extension just makes the big rank
computations faster.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("maxclass._gauss", ["src/maxclass/_gauss.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
