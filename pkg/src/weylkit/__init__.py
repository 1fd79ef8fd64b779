"""Crystallographic root systems, Weyl groups and affine alcove geometry over Q."""
from .errors import WeylError
from .geometry import AffineHyperplane, AffineIsometry, LinearHyperplane, Vector, vec
from .roots import Family, RootSystem, build
from .affine import AffineWeylGroup
from .alcoves import CoxeterComplex

__all__ = [
    "AffineHyperplane",
    "AffineIsometry",
    "AffineWeylGroup",
    "CoxeterComplex",
    "Family",
    "LinearHyperplane",
    "RootSystem",
    "Vector",
    "WeylError",
    "build",
    "vec",
]
