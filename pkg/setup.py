from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "recordkp.kernels._ckernel",
        ["src/recordkp/kernels/_ckernel.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
