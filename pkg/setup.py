"""Build shim for the optional compiled grid-scan kernel.

``pip install -e . --no-build-isolation`` compiles ``crosssec._kernels``.
The package also runs without the extension: the import-time selector in
``crosssec.kernels`` falls back to the NumPy implementation.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("crosssec._kernels", ["src/crosssec/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
