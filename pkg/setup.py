"""Builds the optional Cython kernels; the package works without them."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("gmorder._kernels", ["src/gmorder/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
