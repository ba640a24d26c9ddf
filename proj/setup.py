"""Extension build for the lucanomial._core module.

Metadata lives in pyproject.toml; this file only wires the C++ sources into a
pybind11 extension. Build with ``pip install --no-build-isolation .`` (or
``-e .`` for editable installs). Requires GMP with its C++ bindings (gmpxx).
"""

import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "lucanomial._core",
    sources=sorted(glob.glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
