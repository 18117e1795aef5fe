"""Artin-map invariants of a quadratic tower F = Q(sqrt(-pt)) in K = F(sqrt p),
with a small engine for the cohomology of finite cyclic groups."""

from .kim import compute_invariant, oracle_invariant, scan
from .quadtower import InvalidDatum, validate

__version__ = "0.1.0"

__all__ = ["compute_invariant", "oracle_invariant", "scan", "validate", "InvalidDatum", "__version__"]
