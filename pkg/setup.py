# This file is part of aerovln.stmr, zero-shot aerial navigation with matrix maps.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import setuptools  # type: ignore

version = {}
with open("aerovln/stmr_version/__init__.py") as fp:
    exec(fp.read(), version)

VERSION = version["VERSION"]

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

extras_require = {"testing": ["pytest>=7.1.1"]}

setuptools.setup(
    name="aerovln.stmr",
    version=VERSION,
    license="GPL",
    description="zero-shot aerial vision-language navigation with matrix map prompts",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=[
        package
        for package in setuptools.find_namespace_packages(include=["aerovln.*"])
        if package[:5] != "tests"
    ],
    package_data={"aerovln.stmr_planners": ["templates/*.txt"]},
    setup_requires=[],
    install_requires=[
        "python-ranges>=1.2.0, <2.0.0",
        "numpy>=1.24.0, <3.0.0",
        "scipy>=1.10.0, <2.0.0",
        "scikit-learn>=1.2.0, <2.0.0",
        "openai>=1.0.0, <3.0.0",
        "python-dotenv>=1.0.0, <2.0.0",
        "tqdm>=4.64.0, <5.0.0",
    ],
    extras_require=extras_require,
    entry_points={
        "console_scripts": ["aerovln-stmr=aerovln.stmr_commands:main"],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Operating System :: Unix",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    python_requires=">=3.11, <4",
)
