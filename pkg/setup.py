import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the numpy
# implementations in ftomo.kernels.py_kernels when the extension is absent.
ext_modules = []
if not os.environ.get("FTOMO_SKIP_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "ftomo.kernels._core",
                    ["src/ftomo/kernels/_core.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
