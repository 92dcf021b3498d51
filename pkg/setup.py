from os import path
from setuptools import setup, find_packages

here = path.abspath(path.dirname(__file__))
with open(path.join(here, 'README.rst')) as f:
    long_description = f.read()

setup(
    name='cbgraph',
    version='0.1.0',
    description='Cache-line-blocked dynamic graph storage with interleaved, '
                'prefetch-gated execution',
    long_description=long_description,
    license='Apache License, 2.0',
    classifiers=[
                 'Development Status :: 3 - Alpha',
                 'Topic :: Scientific/Engineering',
                 'Topic :: Database :: Database Engines/Servers',
                 'Intended Audience :: Science/Research',
                 'License :: OSI Approved :: Apache Software License',
                 'Programming Language :: Python :: 3',
                 ],
    keywords='dynamic graph storage B+ tree prefetching coroutines',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples',
                                    'examples.*']),
    include_package_data=True,
    install_requires=['numpy', 'psutil', 'pandas', 'numba'],
    extras_require={
        'hwcounters': ['py-perf-event'],
        'test': ['pytest', 'networkx'],
        'doc': ['sphinx', 'sphinx_rtd_theme', 'numpydoc'],
    },
    entry_points={
        'console_scripts': ['cbgraph = cbgraph.bench.cli:main'],
    },
    python_requires='>=3.8'
)
