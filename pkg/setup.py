from setuptools import Extension, setup

# The compiled kernel is an optional speedup: if Cython or a C compiler is
# missing the build proceeds and the package falls back to the pure-Python
# kernels at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "subcomp._kernels._ckernels",
                sources=["src/subcomp/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
