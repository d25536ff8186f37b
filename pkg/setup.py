import io

from setuptools import find_packages, setup

with io.open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="chebdisc",
    version="0.1.0",
    description="Exact evaluation, uniform asymptotics and zeros of discrete "
                "Chebyshev polynomials",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=("tests", "tests.*", "example")),
    install_requires=[
        'sqlalchemy>=1.4',
        'numpy>=1.17',
        'mpmath>=1.1',
    ],
    license='MIT',
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points={
        "console_scripts": [
            "chebdisc=chebdisc.harness.cli:main",
        ],
    },
)
