"""Build script.

The compiled kernel (modinv._core_c) is optional: if Cython or a C compiler
is missing the package installs anyway and falls back to the pure Python
kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "modinv._core_c",
                ["src/modinv/_core_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
