# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

version = "1.0.0"

with open("README.rst", "r") as fh:
    long_description = fh.read()

with open("docs/changelog.rst", "r") as fh:
    long_description += "\n\n"
    long_description += fh.read()

setup(
    name="mcurve",
    version=version,
    description="Multicurve coordinates and path component census on "
                "punctured surfaces",
    long_description=long_description,
    # Get more strings from
    # http://pypi.python.org/pypi?:action=list_classifiers
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
    ],
    keywords="multicurve surface coordinates census",
    author="MCURVE developers",
    license="GPLv2",
    packages=find_packages("src", exclude=["ez_setup"]),
    package_dir={"": "src"},
    package_data={"mcurve": ["tests/doctests/*.rst"]},
    include_package_data=True,
    zip_safe=False,
    python_requires=">=3.8",
    install_requires=[
        "setuptools",
        "zope.interface",
        "zope.component",
        "click",
        "svgwrite",
        "numpy",
    ],
    extras_require={
        "test": [
            "zope.testrunner",
        ]
    },
    entry_points="""
      # -*- Entry points: -*-
      [console_scripts]
      mcurve = mcurve.cli:main
      """,
)
