from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "euclidsail._euclidsail",
    [
        "python/module.cpp",
        "src/mat2.cpp",
        "src/counting.cpp",
        "src/enumeration.cpp",
        "src/lattice.cpp",
        "src/sail.cpp",
        "src/gaussian.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(
    packages=["euclidsail"],
    package_dir={"euclidsail": "python/euclidsail"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
