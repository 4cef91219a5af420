"""Build hook: compile the Cython kernel when possible, else ship pure Python."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("COXTWIST_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("coxtwist._kernel", ["src/coxtwist/_kernel.pyx"])],
            compiler_directives={"language_level": 3},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
