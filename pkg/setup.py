import os

import setuptools

long_description = None
with open(os.path.join(os.path.dirname(__file__), 'README.md')) as _in:
    long_description = _in.read()

setuptools.setup(
    name = 'cellsheaf',
    version = '0.4.0',
    author = 'The cellsheaf Authors',
    description = 'Exact computations with cellular sheaves and cosheaves',
    long_description = long_description,
    long_description_content_type = 'text/markdown',
    packages = setuptools.find_packages(exclude=['test', 'test.*']),
    package_data = {
        'cellsheaf': [
            'templates/*.j2',
            ],
        },
    install_requires = [
        'sympy>=1.9',
        'networkx>=2.6',
        'semver>=2.10.0,<3.0',
        'jinja2>=2.11',
        'pyyaml>=5.1',
        'marshmallow>=3.13,<4.0',
    ],
    scripts = ['bin/cellsheaf'],
    classifiers = [
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    license = 'Apache License 2.0',
    keywords = 'sheaf cosheaf homology',
    zip_safe = False,
    python_requires='>=3.8',
)
