"""Builds the optional compiled kernel; the package runs without it."""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("momentkit.numeric._jacobi", ["src/momentkit/numeric/_jacobi.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
