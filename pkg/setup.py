from setuptools import setup, find_packages
import os

setup(
  name='lcstorsion',
  version='1.0',
  packages=find_packages(),
  python_requires='>=3.8',
  entry_points = {
    'console_scripts': [
      'lcstorsion = lcstorsion.cli:main',
    ],
  },
  license='LICENSE',
  description='Torsion in quotients of the free associative ring by lower central series ideals.',
  long_description=open(os.path.join(os.path.dirname(__file__), 'README.md')).read(),
  install_requires=[
    "parsimonious >= 0.8",
    "colorama >= 0.4",
    "sympy >= 1.9",
  ],
  classifiers=[
    'Development Status :: 3 - Alpha',
    'Natural Language :: English',
    'License :: OSI Approved :: GNU General Public License (GPL)',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
  ],
)
