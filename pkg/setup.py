import setuptools
from distutils.util import convert_path

with open("README.md", "r") as fh:
    long_description = fh.read()

main_ns = {}
ver_path = convert_path('dswitch/version.py')
with open(ver_path) as ver_file:
    exec(ver_file.read(), main_ns)

setuptools.setup(
    name="dswitch",
    version=main_ns['__version__'],
    description="Switching methods for cospectral graphs from designs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='GNU General Public License Version 3',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'PyYAML',
        'tabulate>=0.8.7',
        'sympy>=1.9',
        'networkx>=2.6',
    ],
    extras_require={
        'test': ['pytest>=6.0'],
    },
    entry_points={
        'console_scripts': ['dswitch = dswitch.cli:main'],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Programming Language :: Python :: 3"
    ],
    python_requires='>=3.9'
)
