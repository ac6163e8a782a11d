from setuptools import setup, find_packages

setup(
    name="wiener-polarity",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    py_modules=["main_wp"],
    install_requires=[
        "pandas>=1.5",
        "numpy",
        "networkx>=2.6",
    ],
    extras_require={
        "dev": [
            "pytest>=7.3.1",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.0",
        ],
    },
    python_requires=">=3.8",
)
