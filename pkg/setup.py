import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("MONTECC_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [Extension("montecc._core", ["src/montecc/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: ship the pure-Python kernels only.
        extensions = []

setup(ext_modules=extensions)
