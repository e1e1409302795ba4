"""Eisenstein integer toolkit: exact ring arithmetic, prime factorization,
divisor-count lower-bound verification, refinement of finite sets against
those bounds, an exhaustive minimal-prime-support subset search, and a
sparse-polynomial vector-set construction."""

from eulab.core import EInt, LAMBDA, OMEGA, ONE, UNITS, ZERO, gcd

__version__ = "0.1.0"

__all__ = ["EInt", "ZERO", "ONE", "OMEGA", "LAMBDA", "UNITS", "gcd", "__version__"]
