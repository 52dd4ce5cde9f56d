from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("chipalg.kernels._speedups", ["src/chipalg/kernels/_speedups.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
