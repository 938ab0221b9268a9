from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("ducci._fastcore", ["src/ducci/_fastcore.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    # No Cython at build time: the package still works on the pure-Python
    # kernels selected at import.
    ext_modules = []

setup(ext_modules=ext_modules)
