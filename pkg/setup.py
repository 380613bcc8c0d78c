from setuptools import setup, find_packages

setup(
    name="locc-superposition",
    version="1.0.0",
    description="LOCC conversion of superpositions of bi-orthogonal entangled states",
    author="LOCC Superposition Developers",
    python_requires=">=3.10",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "pydantic>=2.5.0",
        "numpy>=1.24.0",
        "scipy>=1.10.0",
        "pandas>=1.5.0",
        "click>=8.1.0",
        "python-dotenv>=1.0.0",
        "orjson>=3.9.0",
    ],
    extras_require={
        "dev": [
            "pytest>=7.4.0",
        ]
    },
    entry_points={
        "console_scripts": [
            "locc-superpose=locc_superposition.cli:main",
        ],
    },
)
