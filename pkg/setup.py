from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional=True: a failed compile degrades to the pure-Python kernel.
    ext_modules = cythonize(
        [
            Extension(
                "fusionkit._match_kernel",
                ["src/fusionkit/_match_kernel.pyx"],
                optional=True,
            )
        ]
    )

setup(ext_modules=ext_modules)
