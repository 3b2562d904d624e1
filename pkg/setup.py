import os

from setuptools import setup

ext_modules = []
if os.environ.get("BASELOCI_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("baseloci._kernels._lattice", ["src/baseloci/_kernels/_lattice.pyx"])],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
