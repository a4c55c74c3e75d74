"""Build script: compiles the Cython kernel when possible.

The package is fully functional without the extension (the pure-Python twin
in matchcov._kernel.pykernel is selected at import time), so a failed
extension build degrades to a source-only install instead of aborting.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/matchcov/_kernel/ckernel.pyx"],
        language_level="3",
    )
except Exception as exc:  # no Cython or no compiler: pure-Python install
    print(f"warning: building without the compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
