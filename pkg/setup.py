"""Build hook for the optional compiled kernels.

Metadata lives in pyproject.toml.  When Cython or a C compiler is missing
the extension is skipped and the package falls back to pure Python.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("dpva._ckernels", ["src/dpva/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
