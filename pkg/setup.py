from setuptools import find_packages, setup

setup(
    name="pyNakajimaCrystals",
    version="0.1.0",
    description="Nakajima monomial and tableau realizations of A_n crystals",
    py_modules=["main"],
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=["numpy>=1.22", "networkx>=2.8"],
    entry_points={"console_scripts": ["pyNakajimaCrystals=main:main"]},
    python_requires=">=3.10",
)
