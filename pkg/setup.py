from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "dynamos._kernel",
                ["src/dynamos/_kernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython available: install runs with the pure-Python kernel only.
    extensions = []

setup(ext_modules=extensions)
