"""
Catalog entry model.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from levikit.algebra import LieAlgebra
from levikit.gradings import DerivationFamily, Grading, grading_to_derivations
from levikit.linalg import Subspace


@dataclass(frozen=True)
class CatalogEntry:
    """A named algebra with its gradings, derivation families and known decomposition."""

    name: str
    algebra: LieAlgebra
    gradings: Tuple[Grading, ...] = ()
    families: Tuple[DerivationFamily, ...] = ()
    expected: Optional[Tuple[Subspace, Subspace]] = None
    description: str = ""
    notes: str = field(default="", compare=False)

    @property
    def expected_levi(self) -> Optional[Subspace]:
        return self.expected[0] if self.expected else None

    @property
    def expected_radical(self) -> Optional[Subspace]:
        return self.expected[1] if self.expected else None

    def all_families(self) -> List[DerivationFamily]:
        """Explicit families followed by the families of the gradings."""
        return list(self.families) + [grading_to_derivations(self.algebra, gr) for gr in self.gradings]
