"""Packaging settings."""

from codecs import open
from os.path import abspath, dirname, join
from subprocess import call

from setuptools import Command, find_packages, setup

from suncount import __version__
from typing import List

this_dir = abspath(dirname(__file__))
with open(join(this_dir, 'README.md'), encoding='utf-8') as file:
    long_description = file.read()


class RunTests(Command):
    """Run all tests."""
    description = 'run tests'
    user_options: List[str] = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        errno = call(['py.test', '--cov=suncount', '--cov-report=term-missing'])
        raise SystemExit(errno)


setup(
    name='suncount',
    version=__version__,
    description='Exact census of SU(N) invariants on tensor powers and mixed tensor spaces',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='UNLICENSE',
    classifiers=[
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Natural Language :: English',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
    ],
    keywords='cli symmetric-group young-tableaux robinson-schensted invariants',
    packages=find_packages(exclude=['docs', 'tests*']),
    package_data={'suncount': ['internal/*.conf']},
    include_package_data=True,
    install_requires=['click>=7.0', 'pyhocon>=0.3.44', 'numpy>=1.17', 'sortedcontainers>=2.0.4', 'sty==1.0.0b7',
                      'better-exceptions>=0.2.2'],
    extras_require={
        'test': ['coverage', 'pytest', 'pytest-cov', 'pytest-mock', 'pytest-timeout', 'sympy'],
    },
    entry_points={
        'console_scripts': [
            'suncount=suncount.cli:main',
        ],
    },
    cmdclass={'test': RunTests},
)
