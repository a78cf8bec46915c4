import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HSW_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hsw/_core.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package works without the compiled core; hsw.kernels falls
        # back to the numpy implementation.
        pass

setup(ext_modules=ext_modules)
