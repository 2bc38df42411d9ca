#!/usr/bin/env python

import setuptools

VERSION = '0.2.0'
PACKAGE_NAME = 'uavmesh'
DESCRIPTION = 'uavmesh simulates wireless mesh networks whose access points are kept powered by a UAV fleet'  # nopep8


def create_long_description():
    with open('README.md', 'r', encoding='utf-8') as fh:
        long_description = fh.read()

        # Replace the relative paths in the README.md
        # with links to the documentation
        long_description = long_description.replace(
            './docs/operation_models.md',
            'https://github.com/uavmesh/uavmesh/blob/main/docs/operation_models.md'  # nopep8
        )

        long_description = long_description.replace(
            './example/',
            'https://github.com/uavmesh/uavmesh/tree/main/example'
        )

        long_description = long_description.replace(
            './docs/setting_up_the_environment.md',
            'https://github.com/uavmesh/uavmesh/blob/main/docs/setting_up_the_environment.md'  # nopep8
        )
        return long_description


long_description = create_long_description()

setuptools.setup(
    name=PACKAGE_NAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=long_description,
    license='MIT',
    long_description_content_type='text/markdown',
    url='https://github.com/uavmesh/uavmesh',
    packages=setuptools.find_packages(include=[
        'uavmesh',
        'uavmesh.cmd',
        'uavmesh.cmd.outputs',
        'uavmesh.engine',
        'uavmesh.parser',
        'uavmesh.scheduler',
    ]),
    install_requires=[
        'lark>=1.0.0',
        'PyYAML>=5.4.1',
        'numpy>=1.21',
        'scipy>=1.7',
    ],
    python_requires='>=3.8',
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering',
        'Operating System :: OS Independent'
    ],
    entry_points={
        'console_scripts': ['uavmesh=uavmesh.cmd:main']
    },
    package_data={'uavmesh': ['grammar/config.lark']}
)
