from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install still works; the solvers fall back to the
    # interpreted kernel.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ocdlab._ocd_core",
                ["src/ocdlab/_ocd_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
