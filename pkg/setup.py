import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SURFALG_PURE"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            "src/surfalg/_kernel.pyx",
            compiler_directives={"language_level": "3"},
        )
        for ext in ext_modules:
            ext.include_dirs.append(numpy.get_include())
            ext.define_macros.append(("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION"))
    except Exception:
        # No Cython / no compiler: the package falls back to the
        # pure-Python kernel at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
