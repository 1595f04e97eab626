"""Builds the optional Cython speedup kernels.

If the extension cannot be compiled (no compiler, no Cython), the install
still succeeds and the package runs on the pure-Python kernels.  Set
CHUNGLU_NO_EXT=1 to skip the extension on purpose.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Never fail the install over the speedup extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            _warn_skipped(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            _warn_skipped(exc)


def _warn_skipped(exc):
    warnings.warn(
        "chunglu: compiling the speedup kernels failed (%s); "
        "falling back to the pure-Python implementation" % (exc,)
    )


ext_modules = []
if os.environ.get("CHUNGLU_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chunglu._kernels._ckern",
                    sources=["src/chunglu/_kernels/_ckern.pyx"],
                    # -ffp-contract=off: no fused multiply-adds, so float
                    # expressions round exactly like the pure-Python kernels
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
