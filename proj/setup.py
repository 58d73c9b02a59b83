"""Build the pybind11 extension by driving the project's CMake build.

The CMake project stages the compiled module wherever
POLYCOMB_PYTHON_STAGE_DIR points; here that is the wheel's package
directory, so setuptools picks it up like any other extension output.
"""

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
        import pybind11

        package_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            f"-DCMAKE_BUILD_TYPE={'Debug' if self.debug else 'Release'}",
            f"-DPOLYCOMB_PYTHON_STAGE_DIR={package_dir}",
            "-DPOLYCOMB_BUILD_TESTS=OFF",
            "-DPOLYCOMB_BUILD_CLI=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
        ]
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            check=True,
        )


setup(
    packages=["polycomb"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("polycomb._core")],
    cmdclass={"build_ext": CMakeBuild},
)
