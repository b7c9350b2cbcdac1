"""Builds the diocount extension by driving the CMake project.

The C++ core, the CLI and the tests all live in the top-level CMake build;
this shim only asks it for the python module, so a wheel build and a plain
`cmake --build` produce the same binaries.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        ext_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DDIO_PYTHON_OUTPUT_DIR={ext_dir}",
            f"-DPython_EXECUTABLE={sys.executable}",
            "-DDIO_BUILD_CLI=OFF",
            "-DDIO_BUILD_TESTS=OFF",
        ]
        subprocess.run(configure, cwd=build_temp, check=True)
        build = ["cmake", "--build", ".", "--target", "diocount_core"]
        if "CMAKE_BUILD_PARALLEL_LEVEL" not in os.environ:
            build += ["-j", str(os.cpu_count() or 2)]
        subprocess.run(build, cwd=build_temp, check=True)


setup(
    ext_modules=[CMakeExtension("diocount._core")],
    cmdclass={"build_ext": CMakeBuild},
)
