"""hypalg application package.

This package contains the exact-arithmetic algebra of quaternionic and
octonionic barred operators, their real and complex matrix translations,
the derivation of hypercomplex group generators, and the CLI and HTTP
surfaces built on top of them.
"""

__version__ = "1.0.0"
