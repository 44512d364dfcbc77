# Copyright 2026 The spinrsc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import glob
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(__file__).parent.resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_temp = Path(self.build_temp).resolve() / "cmake"
        build_temp.mkdir(parents=True, exist_ok=True)

        cmakedir = subprocess.check_output(
            [sys.executable, "-m", "pybind11", "--cmakedir"], text=True
        ).strip()
        configure = [
            "cmake",
            "-S", ext.sourcedir,
            "-B", str(build_temp),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSPINRSC_PYTHON=ON",
            "-DSPINRSC_BUILD_TESTS=OFF",
            f"-Dpybind11_DIR={cmakedir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
        ]
        subprocess.check_call(configure)
        subprocess.check_call(["cmake", "--build", str(build_temp), "--target", "_core"])

        produced = glob.glob(str(build_temp / "python" / "spinrsc" / "_core*"))
        if not produced:
            raise RuntimeError("CMake build produced no _core module")
        extdir.mkdir(parents=True, exist_ok=True)
        for f in produced:
            shutil.copy2(f, extdir)


setup(
    packages=["spinrsc"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("spinrsc._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
