import os

from setuptools import setup

ext_modules = []
if not os.environ.get("TWOCONN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/twoconn/_core/kernels.pyx"],
            language_level=3,
        )
    except ImportError:
        # Pure-python fallback is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
