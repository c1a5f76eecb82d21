#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
from setuptools import setup, find_packages


# Path to the directory that contains this setup.py file.
base_dir = os.path.abspath(os.path.dirname(__file__))


setup(
    name="labalign",
    version='0.1.0',
    description='Label-guided manifold alignment of two domains through diffusion similarities and optimal transport',
    long_description=open(os.path.join(base_dir, 'README.md')).read(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["test", "test.*"]),
    include_package_data=True,
    zip_safe=False,
    install_requires=['numpy>=1.18', 'scipy>=1.5', 'pandas>=1.1', 'pot>=0.9'],
    extras_require={'test': ['pytest']},
    python_requires='>=3.8',
    license="LGPL-2.1",
    keywords=["manifold alignment", "domain adaptation",
            "optimal transport", "diffusion maps", "spectral embedding"],
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU Lesser General Public License v2 or later (LGPLv2+)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'Topic :: Software Development :: Libraries'
    ],
    entry_points={
        'console_scripts': [
            'labalign=labalign.cli.labalign_cmd:main',
            'la_generate.py=labalign.cli.la_generate:main',
            'la_align.py=labalign.cli.la_align:main',
            'la_eval.py=labalign.cli.la_eval:main',
            'la_sweep.py=labalign.cli.la_sweep:main'
        ]
    }
)
