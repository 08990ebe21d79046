"""Anticanonical divisors and color types of spherical homogeneous spaces.

Rational numbers are passed and returned as strings such as "3" or "-1/2".
"""

from ._sphanti import (
    Datum,
    DatumInconsistency,
    InsufficientData,
    ParseError,
    catalog_keys,
    kappa,
    positive_roots,
)

__all__ = [
    "Datum",
    "DatumInconsistency",
    "InsufficientData",
    "ParseError",
    "catalog_keys",
    "kappa",
    "positive_roots",
]
