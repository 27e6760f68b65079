"""Build the optional Cython kernels.

The package works without them: ``cdcrit._backend`` falls back to the
pure-Python kernels when the extension is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("cdcrit._kernels", sources=["src/cdcrit/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
