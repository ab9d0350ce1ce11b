from setuptools import setup
import os

PACKAGE = "nutcirc"
NAME = "nutcirc"
DESCRIPTION = "Exact-arithmetic library and command line for circulant nut " +\
              "graphs: cyclotomic divisibility of sparse polynomials, the " +\
              "D' and D'' generator families, residue tables and an " +\
              "exhaustive existence catalog by order and degree."
AUTHOR = "Christian O'Reilly"
AUTHOR_EMAIL = "christian.oreilly@epfl.ch"
VERSION = "0.3.0"

def is_package(path):
    return (
        os.path.isdir(path) and
        os.path.isfile(os.path.join(path, '__init__.py'))
        )

def find_packages(path, base="" ):
    """ Find all packages in path """
    packages = {}
    for item in os.listdir(path):
        dir = os.path.join(path, item)
        if is_package( dir ):
            if base:
                module_name = "%(base)s.%(item)s" % vars()
            else:
                module_name = item
            packages[module_name] = dir
            packages.update(find_packages(dir, module_name))
    return packages

packages = {name: dir for name, dir in find_packages(".").items() if name.startswith(PACKAGE)}
appendix = [os.path.join("data", "appendix", f) for f in sorted(os.listdir(os.path.join("data", "appendix")))]

setup(
    name=NAME,
    packages=list(packages.keys()),
    package_dir=packages,
    version=VERSION,
    description=DESCRIPTION,
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    author=AUTHOR,
    author_email=AUTHOR_EMAIL,
    maintainer=AUTHOR,
    maintainer_email=AUTHOR_EMAIL,
    license='LICENSE.txt',
    python_requires=">=3.9",
    install_requires=["numpy", "sympy", "networkx"],
    extras_require={"test": ["pytest"]},
    data_files=[(os.path.join("data", "appendix"), appendix)],
    entry_points={"console_scripts": ["nutcirc=nutcirc.cli:main"]},
    classifiers=["Development Status :: 3 - Alpha",
			"Environment :: Console",
			"Intended Audience :: Science/Research",
			"License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
			"Natural Language :: English",
			"Programming Language :: Python :: 3",
			"Topic :: Scientific/Engineering :: Mathematics"])
