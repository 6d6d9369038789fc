"""Build shim: compiles the optional speedup extension when Cython and a C
toolchain are available, and silently falls back to the pure-Python kernel
otherwise (kernel selection happens at import time in guttstar.kernel)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/guttstar/_speedups.pyx"], language_level=3
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"guttstar: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
