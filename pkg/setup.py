from setuptools import setup, find_packages

with open("README.md", encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="meshroots",
    version="1.0.0",
    description="Sistemas de raíces ADE, carcaj de traslación Γ̂ y álgebra dg preproyectiva: tejido de clases, Hom/Ext¹ y verificación de identidades.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="Equipo meshroots (ver README)",
    packages=find_packages(
        include=["meshroots", "meshroots.*"],
        exclude=["tests", "tests.*", "venv", "venv.*"]
    ),
    include_package_data=True,
    package_data={},
    install_requires=[
        "pydantic==2.5.0",
        "pydantic-settings==2.1.0",
        "python-dotenv==1.0.0",
        "structlog==23.2.0",
        "sympy==1.12",
    ],
    extras_require={
        "dev": [
            "pytest==7.4.3",
            "pytest-cov==4.1.0",
            "pytest-mock==3.12.0",
            "black==23.11.0",
            "flake8==6.1.0",
            "mypy==1.7.1",
            "pre-commit==3.6.0"
        ]
    },
    python_requires=">=3.10",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    entry_points={
        "console_scripts": [
            "meshroots=meshroots.cli.main:main",
        ]
    },
    license="MIT",
    keywords="dynkin raíces carcaj auslander-reiten álgebra-dg preproyectiva homología",
)
