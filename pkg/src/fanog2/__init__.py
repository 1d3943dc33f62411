"""Exact arithmetic models of the Fano plane and the algebras built on it.

Modules:
    scalars     exact coefficient fields (rationals, Gaussian rationals, F_p)
    fano        the seven-point plane, its collineations and orientations
    compfactor  sign tables turning the group algebra into a composition algebra
    radon       the finite Radon transform on subsets and sign functions
    octonion    the eight-dimensional composition algebra over any field
    lifting     signed automorphisms: the order-1344 augmented group
    g2          the 14-dimensional derivation algebra with incidence bracket law
    forms       invariant 3- and 4-forms on the imaginary part
    linalg      exact dense linear algebra helpers
    cli         the `fanog2` certificate command
"""

__version__ = "1.0.0"

from . import (  # noqa: F401
    compfactor,
    fano,
    forms,
    g2,
    lifting,
    linalg,
    octonion,
    radon,
    scalars,
)
from .scalars import QI, QQ, PrimeField, field_from_descriptor  # noqa: F401
