from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/plactic/_schensted.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the pure-Python kernel is selected at import time when the
    # extension is unavailable
    ext_modules = []

setup(ext_modules=ext_modules)
