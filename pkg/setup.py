#!/usr/bin/env python
from __future__ import absolute_import
from __future__ import print_function

import os
import subprocess
import re

from setuptools import setup
from setuptools.command.sdist import sdist as _sdist

VERSION_PY = """
# This file is originally generated from Git information by running 'setup.py
# sdist'. Distribution tarballs contain a pre-generated copy of this file.

__version__ = '%s'
"""


def update_version_py():
    if not os.path.isdir(".git"):
        print("This does not appear to be a Git repository.")
        return
    try:
        p = subprocess.Popen("git rev-list HEAD --count".split(),
                             stdout=subprocess.PIPE)
    except EnvironmentError:
        print("unable to run git, leaving ucclab/_version.py alone")
        return
    stdout = p.communicate()[0]
    if p.returncode != 0:
        print("unable to run git, leaving ucclab/_version.py alone")
        return
    ver = "0.1." + stdout.decode().strip()
    with open("ucclab/_version.py", "w") as f:
        f.write(VERSION_PY % ver)
    print("set ucclab/_version.py to '%s'" % ver)


def get_version():
    # generated file first, then the package metadata
    for path, pattern in (("ucclab/_version.py",
                           "__version__ = '([^']+)'"),
                          ("ucclab/__init__.py",
                           "__version__ = \"v?([^\"]+)\"")):
        try:
            f = open(path)
        except EnvironmentError:
            continue
        with f:
            for line in f.readlines():
                mo = re.match(pattern, line)
                if mo:
                    return mo.group(1)
    return None


class sdist(_sdist):

    def run(self):
        update_version_py()
        self.distribution.metadata.version = get_version()
        return _sdist.run(self)


setup(
    name='ucc-lab',
    version=get_version(),
    author='ucclab developers',
    packages=['ucclab',
              'ucclab.io'
              ],
    scripts=[],
    include_package_data=True,
    package_data={},
    license='MIT',
    description='Exact checks of the union-closed sets conjecture on set '
                'families and bipartite graphs',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    install_requires=[
        "joblib",
        "toolz",
        "networkx >= 2.6",
        "numpy >= 1.10.4",
        "requests",
        "scikit-learn >= 0.18.2",
    ],
    tests_require=["pytest"],
    entry_points={
        'console_scripts': ['ucc-lab = ucclab.cli:main'],
    },
    cmdclass={'sdist': sdist}
)
