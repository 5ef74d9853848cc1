"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python twin of every kernel
is selected at import time); set CHARKIT_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CHARKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("charkit._kernels_c", ["src/charkit/_kernels_c.pyx"])],
            language_level="3",
            compiler_directives={"boundscheck": False, "wraparound": False},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
