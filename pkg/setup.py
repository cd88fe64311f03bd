from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("latlab._svp_c", ["src/latlab/_svp_c.pyx"],
                   extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package is fully functional on the pure-Python kernel
    ext_modules = []

setup(ext_modules=ext_modules)
