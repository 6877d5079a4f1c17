from setuptools import setup, find_packages

def read_requirements():
    with open('requirements.txt', 'r') as req_file:
        return [line for line in req_file.read().splitlines() if line.strip()]

def read_meta(name):
    with open(f'meta/{name}.txt', 'r') as meta_file:
        return meta_file.read().strip()

setup(
    name='upaes',
    version=read_meta('version'),
    description=read_meta('description'),
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(include=["upaes", "upaes.*"]),
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Operating System :: OS Independent',
    ],
    python_requires='>=3.10',
    install_requires=read_requirements(),
    entry_points={
        'console_scripts': ['upaes=upaes.cli:main'],
    },
)
