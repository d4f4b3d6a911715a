#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os.path
import re

from setuptools import setup, find_packages


def parse_requirements(path):
    """Parse ``requirements.txt`` at ``path``."""
    requirements = []
    with open(path, "rt") as reqs_f:
        for line in reqs_f:
            line = line.strip()
            if line.startswith("-r"):
                fname = line.split()[1]
                inner_path = os.path.join(os.path.dirname(path), fname)
                requirements += parse_requirements(inner_path)
            elif line != "" and not line.startswith("#"):
                requirements.append(line)
    return requirements


def parse_version(path):
    """Parse ``__version__`` from the package ``__init__.py`` at ``path``."""
    with open(path, "rt") as init_f:
        return re.search(r'^__version__ = "([^"]+)"', init_f.read(), re.MULTILINE).group(1)


with open("README.md") as readme_file:
    readme = readme_file.read()

with open("HISTORY.md") as history_file:
    history = history_file.read()

test_requirements = parse_requirements("requirements/test.txt")
install_requirements = parse_requirements("requirements/base.txt")

setup(
    author="ifcavity developers",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering :: Physics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
    entry_points={"console_scripts": ("ifcavity = ifcavity.apps.ifcavity_cli:main",)},
    description=(
        "Interaction-free detection of semitransparent objects in a Fabry-Perot cavity: "
        "security, SNR and their optimization"
    ),
    install_requires=install_requirements,
    license="MIT license",
    long_description=readme + "\n\n" + history,
    long_description_content_type="text/markdown",
    include_package_data=True,
    keywords="ifcavity, interaction-free measurement, cavity",
    name="ifcavity",
    packages=find_packages(include=["ifcavity*"]),
    python_requires=">=3.7",
    test_suite="tests",
    tests_require=test_requirements,
    version=parse_version(os.path.join("ifcavity", "__init__.py")),
    zip_safe=False,
)
