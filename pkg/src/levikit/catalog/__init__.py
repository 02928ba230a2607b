"""
Catalog of named test algebras for levikit.

Every entry carries the algebra, its gradings and derivation families, and the expected Levi
decomposition. ``abelian<n>`` and ``upper_triangular<n>`` accept any size.
"""

import re
from typing import Any, Callable, Dict, List

from levikit.errors import UnknownName

from .classical import abelian, gl2, heisenberg3, sl2, so3, upper_triangular
from .entry import CatalogEntry
from .random_instances import RandomInstance, random_instance
from .semidirect import sl2_sd_h3, sl2_sd_v2, sl2_sd_v2_skewed

# Entry registry with metadata
_ENTRIES: Dict[str, Dict[str, Any]] = {
    "abelian3": {
        "builder": lambda: abelian(3),
        "name": "abelian3",
        "description": "3-dimensional abelian algebra (solvable)",
    },
    "heisenberg3": {
        "builder": heisenberg3,
        "name": "heisenberg3",
        "description": "Heisenberg algebra [x, y] = z (nilpotent)",
    },
    "sl2": {
        "builder": sl2,
        "name": "sl2",
        "description": "sl(2), graded by ad(h)",
    },
    "so3": {
        "builder": so3,
        "name": "so3",
        "description": "so(3), simple with irrational ad-spectra",
    },
    "gl2": {
        "builder": gl2,
        "name": "gl2",
        "description": "gl(2) = sl(2) + center (Case 2a)",
    },
    "upper_triangular3": {
        "builder": lambda: upper_triangular(3),
        "name": "upper_triangular3",
        "description": "upper triangular 3x3 matrices (solvable, rank-2 grading)",
    },
    "sl2_sd_v2": {
        "builder": sl2_sd_v2,
        "name": "sl2_sd_v2",
        "description": "sl(2) acting on Q^2 with an outer scale derivation (Case 2b)",
    },
    "sl2_sd_v2_skewed": {
        "builder": sl2_sd_v2_skewed,
        "name": "sl2_sd_v2_skewed",
        "description": "sl2_sd_v2 with the grading moved off the coordinate Levi subalgebra",
    },
    "sl2_sd_h3": {
        "builder": sl2_sd_h3,
        "name": "sl2_sd_h3",
        "description": "sl(2) acting on the Heisenberg algebra (Case 1)",
    },
}

_SIZED: Dict[str, Callable[[int], CatalogEntry]] = {
    "abelian": abelian,
    "upper_triangular": upper_triangular,
}


def get_available_entries() -> List[str]:
    """
    Get a list of available catalog entry names.

    Returns:
        A list of available entry names.
    """
    return list(_ENTRIES.keys())


def describe(name: str) -> str:
    if name in _ENTRIES:
        return _ENTRIES[name]["description"]
    return get_entry(name).description


def get_entry(name: str) -> CatalogEntry:
    """
    Build a catalog entry by name.

    Args:
        name: A registered name, or ``abelian<n>`` / ``upper_triangular<n>``.

    Returns:
        The catalog entry.

    Raises:
        UnknownName: The name is not in the catalog.
    """
    if name in _ENTRIES:
        return _ENTRIES[name]["builder"]()
    match = re.fullmatch(r"([a-z_]+?)(\d+)", name)
    if match and match.group(1) in _SIZED and int(match.group(2)) > 0:
        return _SIZED[match.group(1)](int(match.group(2)))
    raise UnknownName(f"no catalog entry named {name!r}; available: {', '.join(get_available_entries())}")


def get_entries(names: List[str]) -> List[CatalogEntry]:
    return [get_entry(name) for name in names]


__all__ = [
    "CatalogEntry",
    "RandomInstance",
    "describe",
    "get_available_entries",
    "get_entries",
    "get_entry",
    "random_instance",
]
