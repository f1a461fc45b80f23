import os

from setuptools import Extension, setup

# The compiled pair-scan kernel is optional: the package falls back to the
# pure-Python engine at import time when the extension is absent.
# Set UDG_NO_EXT=1 to skip building it.
ext_modules = []
if os.environ.get("UDG_NO_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("udg._pairscan", ["src/udg/_pairscan.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
