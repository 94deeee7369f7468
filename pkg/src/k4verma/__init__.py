"""Exact computations with the finite Verma modules of the annihilation superalgebra of K'_4."""

from .characters import CharacterSeries, character_series, size_formula, size_from_series
from .homology import ComplexNode, gr_homology, homology_dims
from .morphisms import MorphismTag, singular_space
from .scalars import GaussianRational
from .verma import ModuleSpec, VermaVector

__all__ = [
    "CharacterSeries",
    "ComplexNode",
    "GaussianRational",
    "ModuleSpec",
    "MorphismTag",
    "VermaVector",
    "character_series",
    "gr_homology",
    "homology_dims",
    "singular_space",
    "size_formula",
    "size_from_series",
]
