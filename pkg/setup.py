"""Builds the optional compiled grid-search kernel.

The extension is a speedup only: if Cython (or a C compiler) is missing the
install still succeeds and the package falls back to the pure-Python kernel
at import time. Set ACTIVITYFORGE_NO_EXT=1 to skip the extension outright.
"""

import os

from setuptools import setup


def _extensions():
    if os.environ.get("ACTIVITYFORGE_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        ["src/activityforge/puzzle/_fastkernel.pyx"],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=_extensions())
