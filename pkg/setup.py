import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="eh-certify",
    version="0.1.0",
    author="Mika Hiltunen",
    author_email="saaste@gmail.com",
    description="Certified bipartite witnesses, induced-path certificates and homogeneous sets "
                "for graphs without induced P_k and co-P_k",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["*test", "*test.*"]),
    install_requires=[
        'numpy>=1.24',
        'networkx>=3.1'
    ],
    entry_points={
        'console_scripts': ['eh-certify=eh_certify.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.10',
)
