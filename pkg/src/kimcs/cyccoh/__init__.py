"""Cohomology of G = Z/n with finitely generated abelian coefficients."""

from .core import (
    Cochain,
    CohomologyGroup,
    GModule,
    Pairing,
    ShortExactSequence,
    coboundary,
    cohomology,
    cohomology_group,
    connecting,
    cup,
    cyclic,
    identity_cocycle,
)

__all__ = [
    "Cochain",
    "CohomologyGroup",
    "GModule",
    "Pairing",
    "ShortExactSequence",
    "coboundary",
    "cohomology",
    "cohomology_group",
    "connecting",
    "cup",
    "cyclic",
    "identity_cocycle",
]
