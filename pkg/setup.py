from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# Python implementations in srgec._kernels.reference when the extension
# is missing (no Cython, no C compiler, or a failed build).
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "srgec._kernels._compiled",
                ["src/srgec/_kernels/_compiled.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
