"""Build hook for the optional compiled reduction kernel.

The extension is a pure speedup; every interface works on the pure-Python
kernel, so any toolchain failure downgrades the install instead of
breaking it.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"skipping compiled kernel, using the pure-Python one: {exc}",
              file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython not installed; building without the compiled kernel",
              file=sys.stderr)
        return []
    return cythonize(
        [Extension("kunz._kernel_c", ["src/kunz/_kernel_c.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
