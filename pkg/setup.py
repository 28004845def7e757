from setuptools import setup, find_packages

with open("requirements.txt") as f:
    requirements = [
        line for line in f.read().splitlines()
        if not line.startswith('#') and line.strip()
    ]

setup(
    name="springer-gln",
    version="0.1.0",
    description="Generalized Springer correspondence for the symmetric space GL_N/O_N",
    packages=find_packages(exclude=["springer_gln.tests", "springer_gln.tests.*"]),
    package_data={"springer_gln.correspondence": ["data/*.tsv"]},
    python_requires=">=3.8",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "springer-gln=springer_gln.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
