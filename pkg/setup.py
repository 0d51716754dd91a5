from setuptools import setup, find_packages
import os
import re

def get_version():
    version_file = os.path.join("src", "k3invariants", "version.py")
    with open(version_file) as f:
        match = re.search(r'^__version__ = ["\']([^"\']*)["\']', f.read())
        if match:
            return match.group(1)
        raise RuntimeError("Unable to find version string.")

setup(
    name="k3invariants",
    version=get_version(),
    description="Exact integer invariants of curve sections of K3 surfaces, with a verification registry "
                "of the numeric claims built on them.",
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    package_data={'k3invariants.registry': ['data/*.json']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.10',
    install_requires=[
        'networkx>=3.3'
    ],
    entry_points={
        'console_scripts': [
            'k3invariants=k3invariants.cli.main:main',
        ],
    },
)
