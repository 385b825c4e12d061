"""Build hook for the optional compiled kernel.

The package is pure Python plus one accelerator extension.  If Cython (or a
C compiler) is unavailable the build still succeeds and zred falls back to
the pure-Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("zred._kernel", ["src/zred/_kernel.pyx"], optional=True)],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
