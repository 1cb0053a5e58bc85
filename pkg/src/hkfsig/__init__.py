"""Exact Hilbert-Kunz multiplicity and F-signature of intersection algebras
of two principal monomial ideals in a polynomial ring."""

from .fan import ExponentData, build_fan, parse_exponents
from .generators import generator_set, generators_for, t_vector
from .hilbert import cone_hilbert_basis, hilbert_set
from .regions import fsig_region, hk_region
from .volume import compute_invariants, region_volume

__all__ = [
    "ExponentData",
    "build_fan",
    "compute_invariants",
    "cone_hilbert_basis",
    "fsig_region",
    "generator_set",
    "generators_for",
    "hilbert_set",
    "hk_region",
    "parse_exponents",
    "region_volume",
    "t_vector",
]

__version__ = "0.1.0"
