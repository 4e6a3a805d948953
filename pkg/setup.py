import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-python kernels are selected at import time when the extension
    # is absent, so a Cython-less build still yields a working package.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "qoracle.kernels._ckernels",
                ["src/qoracle/kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
