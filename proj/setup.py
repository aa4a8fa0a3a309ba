from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "coopcolor_core",
    sources=[
        "src/hypergraph.cpp",
        "src/chain_partition.cpp",
        "src/multipartite.cpp",
        "src/oracle.cpp",
        "src/json_io.cpp",
        "bindings/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
