import collections
import io
import os
import re

from setuptools import find_packages
from setuptools import setup

install_requires = [
    "numpy >= 1.17",
    "lxml",
]

test_require = [
    "PyTest",
    "PyTest-Cov",
    "xmldiff",
    "hypothesis",
]

dev_require = [
    "Tox",
    "isort",
    "check-manifest",
    "flake8",
]

extras_require = {"test": test_require, "dev": dev_require}


def read(filename):
    filename = os.path.join(os.path.dirname(__file__), filename)
    with io.open(filename, mode="r", encoding="utf-8") as fd:
        return re.sub(r":[a-z]+:`~?(.*?)`", u"``\\1``", fd.read())


setup(
    name="NetReserve",
    version="0.1.0",

    author="NetReserve developers",

    description="Simulate and benchmark online randomized resource reservations in a network of coupled servers.",
    long_description=read("README.rst"),
    long_description_content_type="text/x-rst",
    packages=find_packages(exclude=("tests", "tests.*")),
    include_package_data=True,
    package_data={"netreserve.configs": ["*.json"]},
    zip_safe=False,

    project_urls=collections.OrderedDict(
        (
            ("Documentation", "https://netreserve.readthedocs.io"),
        )
    ),

    license="MIT",
    platforms=["posix", "nt"],
    keywords="online optimization, saddle point, primal-dual, resource reservation, regret, constraint violation",

    install_requires=install_requires,
    extras_require=extras_require,
    entry_points={"console_scripts": ["netreserve = netreserve.harness.cli:main"]},

    # complete classifier list: http://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: System :: Networking",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.8",
)
