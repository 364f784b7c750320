"""Exact interval Boolean algebra arithmetic, homogeneity analysis and
certificate-producing combinatorial searches."""

from . import algebra, homogeneity, product, search, terms, triples
from .errors import CapacityError, InputError

__all__ = [
    "algebra",
    "homogeneity",
    "product",
    "search",
    "terms",
    "triples",
    "CapacityError",
    "InputError",
]

__version__ = "0.1.0"
