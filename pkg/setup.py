"""Build script: compiles the optional fast-kernel extension.

The package is pure Python plus one Cython extension holding the modular
arithmetic hot loops.  The extension is optional: if Cython or a C compiler
is unavailable the build proceeds and the package falls back to the pure
Python kernels at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext = Extension(
        "toricdim._fastkernels",
        sources=["src/toricdim/_fastkernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
