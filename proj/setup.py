from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "abcmin._core",
    sources=[
        "bindings/python_module.cpp",
        "src/bigfloat.cpp",
        "src/cli.cpp",
        "src/contrib.cpp",
        "src/numeric.cpp",
        "src/oracle.cpp",
        "src/search.cpp",
        "src/shapes.cpp",
        "src/transforms.cpp",
        "src/tree.cpp",
        "src/verify.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["mpfr", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
