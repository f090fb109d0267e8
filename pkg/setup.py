"""Bidcraft.

Online bidding in repeated first-price auctions against adaptive rivals. See
more details in the [`README.md`](README.md).
"""

import os
import sys

from setuptools import find_packages
from setuptools import setup

# To enable importing version.py directly, we add its path to sys.path.
version_path = os.path.join(os.path.dirname(__file__), 'bidcraft')
sys.path.append(version_path)
from version import __version__  # pylint: disable=g-import-not-at-top

setup(
    name='bidcraft',
    version=__version__,
    description='Dynamic-regret bidding policies for first-price auctions',
    author='Bidcraft Authors',
    license='Apache 2.0',
    packages=find_packages(exclude=['examples', 'examples.*']),
    install_requires=[
        'absl-py>=0.8.1',
        'joblib>=1.0',
        'numpy>=1.17',
        'pandas>=1.5',
        'scipy>=1.4',
    ],
    extras_require={
        'tests': ['pylint>=1.9.0'],
    },
    entry_points={
        'console_scripts': ['bidcraft=bidcraft.cli.main:run_main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
    ],
    keywords='online learning first-price auctions dynamic regret bidding',
)
