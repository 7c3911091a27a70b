from setuptools import find_packages
from setuptools import setup

with open('README.md', 'r') as readme:
    long_description = readme.read()

setup(
    name='hertzsprung',
    version='0.1.0',
    packages=find_packages(exclude=['docs', 'tests*']),

    python_requires='>=3.8',
    install_requires=[
        'bidict==0.21.*',
        'sympy==1.12.*',
    ],
    entry_points={
        'console_scripts': [
            'hertzsprung = hertzsprung.cli:main',
        ],
    },

    author='The Hertzsprung developers',

    description='Hertzsprung patterns: cluster method, transfer matrices, and pattern-rewriting systems',
    long_description=long_description,
    long_description_content_type='text/markdown',

    keywords='permutations patterns combinatorics enumeration cluster-method rewriting',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
