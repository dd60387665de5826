import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qclab._jacobi_cy",
                ["src/qclab/_jacobi_cy.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Package still works without the compiled kernel (pure-python fallback).
    ext_modules = []

setup(ext_modules=ext_modules)
