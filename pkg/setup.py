from setuptools import setup

from hgpcodes import get_version

setup(
    name='hgpcodes',
    version=get_version(),
    description='hypergraph-product quantum codes and their parameters',
    author='The hgpcodes developers',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=['hgpcodes'],
    python_requires='>=3.10',
    install_requires=[
        'docopt==0.6.2',
        'numpy>=2.0',
        'scipy',
    ],
    entry_points={'console_scripts': [
        'hgp = hgpcodes.cmdline:run_from_cmdline']},
)
