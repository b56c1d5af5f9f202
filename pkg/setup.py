from setuptools import setup, find_packages


def get_requirements():
    # intentionally naive, does not support include files etc
    with open("./requirements.txt") as fp:
        return fp.read().split()


setup(
    name="mckay3",
    packages=find_packages(exclude=["tests", "tests.*"]),
    version="0.1.0",
    description="exact and numerical workbench for the SL(3,C) McKay correspondence of cyclic groups",
    license="MIT",
    install_requires=get_requirements(),
    extras_require={"test": ["pytest>=7.0,<9", "hypothesis>=6.40,<7"]},
    options={"bdist_wheel": {"universal": True}},
    entry_points = {
        "console_scripts": [
            "mckay3=mckay3.main:main"
        ]
    },
    classifiers=[
        "Programming Language :: Python",
    ]
)
