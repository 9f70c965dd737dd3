"""Builds the optional compiled kernel extension.

The package works without the extension: propnorm._kernels falls back to
the vectorized numpy implementation when the compiled module is absent.
"""

from setuptools import Extension, setup


def extension_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "propnorm._kernels._cy",
        sources=["src/propnorm/_kernels/_cy.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extension_modules())
