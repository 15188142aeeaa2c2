from setuptools import setup

# The compiled kernel is optional: when Cython (or a C toolchain) is missing
# the package installs anyway and plactic._kernels falls back to pure Python.
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("plactic._kernels._speedups", ["src/plactic/_kernels/_speedups.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
