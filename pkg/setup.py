"""Build glue for the optional compiled tracking kernel.

The package is fully functional without a C compiler: ``bringcover.tracking``
falls back to the pure-Python kernel when the extension is absent.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/bringcover/_tracking_c.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
