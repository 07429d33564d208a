"""Hochschild cohomology, Gerstenhaber brackets and Lie structure of the algebras A(m, N)."""

from .algebra import Algebra, Derivation, Element, Path, euler_derivation
from .cohomology import Cohomology, HClass, Named, index_set
from .field import Field, QQ
from .gerstenhaber import Gerstenhaber, InconsistentSystem, LiftingError
from .lie import LiePresentation, LieStructure, virasoro_subquotient
from .resolution import Gen, Resolution

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Derivation", "Element", "Path", "euler_derivation",
    "Cohomology", "HClass", "Named", "index_set",
    "Field", "QQ",
    "Gerstenhaber", "InconsistentSystem", "LiftingError",
    "LiePresentation", "LieStructure", "virasoro_subquotient",
    "Gen", "Resolution",
]
