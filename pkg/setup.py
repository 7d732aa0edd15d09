"""
Setup script for the lambda playground package.
"""

from setuptools import setup, find_packages

setup(
    name="lambda-playground",
    version="1.0.0",
    description="Playground for generating, typing, reducing and ranking lambda terms and combinators",
    license="Apache 2.0",
    packages=find_packages(where="python"),
    package_dir={"": "python"},
    python_requires=">=3.10",
    install_requires=[
        "numpy==1.24.3",
        "pandas==2.0.3",
        "pyyaml==6.0",
    ],
    extras_require={
        "parallel": ["ray==2.7.0"],
        "dev": [
            "scipy==1.11.0",
            "pytest==7.4.0",
            "pytest-cov==4.1.0",
            "pytest-xdist==3.3.1",
        ],
    },
    entry_points={
        "console_scripts": [
            "lplay=lambda_playground.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
