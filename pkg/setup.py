"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (pure-Python kernels are
selected at import time); building it makes the hot loops several times
faster.  Set PARKSTAT_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("PARKSTAT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/parkstat/_kernels_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
