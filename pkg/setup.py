import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HOOKCONTENT_PURE", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("hookcontent._kernels", ["src/hookcontent/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
