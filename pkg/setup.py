from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("imbessel._kernels_cy",
                   ["src/imbessel/_kernels_cy.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # pure-Python fallback is selected at import when the ext is missing
    extensions = []

setup(ext_modules=extensions)
