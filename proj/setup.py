import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeBuild(build_ext):
    """Build the pybind11 extension through the project's CMake tree."""

    def build_extension(self, ext):
        source = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_dir),
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_fgtwist", "-j4"],
            check=True,
        )
        built = next((build_dir / "python" / "fgtwist").glob("_fgtwist*.so"))
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(built.read_bytes())


setup(
    ext_modules=[Extension("fgtwist._fgtwist", sources=[])],
    cmdclass={"build_ext": CMakeBuild},
)
