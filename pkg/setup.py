from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mapscheme._speedups", ["src/mapscheme/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback is selected at import time; the wheel still works.
    ext_modules = []

setup(ext_modules=ext_modules)
