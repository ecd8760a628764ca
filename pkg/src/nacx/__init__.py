"""Exact computations with nonassociative cyclic algebras S_f = D[t;σ]/D[t;σ]f
over finite-field towers and small cyclic algebras."""

from .coeffalg import cyclic_algebra, field_algebra
from .fields import frobenius, make_finite_field, make_number_field, prime_field
from .petit import PetitAlgebra, is_division, nucleus, petit_algebra
from .skewpoly import SkewPolyRing

__all__ = [
    "PetitAlgebra",
    "SkewPolyRing",
    "cyclic_algebra",
    "field_algebra",
    "frobenius",
    "is_division",
    "make_finite_field",
    "make_number_field",
    "nucleus",
    "petit_algebra",
    "prime_field",
]
