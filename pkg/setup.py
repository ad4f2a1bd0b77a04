from setuptools import setup, find_packages

setup(
    name='toruslab',
    version='0.1.0',
    license='LGPL',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_dir={'toruslab': 'toruslab'},
    install_requires=[
        'mypy_extensions',
        'numpy',
        'sympy',
        'mpmath'],
    tests_require=[
        'tox',
        'mypy',
        'flake8',
        'pytest',
        'pytest-cov'],
    entry_points={
        'console_scripts': ['toruslab=toruslab.cli:main']},
    python_requires='>=3.8'
)
