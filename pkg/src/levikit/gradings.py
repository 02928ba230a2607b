"""
Z^d-gradings and commuting families of semisimple derivations.

A grading ``g = sum_m g_m`` with ``[g_m, g_n] ⊆ g_{m+n}`` corresponds to the family of
commuting derivations acting on ``g_m`` by the scalars ``m_1, ..., m_d``; conversely the joint
eigenspaces of such a family with integer weights form a grading.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from levikit.algebra import LieAlgebra, is_derivation
from levikit.errors import (
    DimensionMismatch,
    IrrationalSpectrum,
    LeviKitError,
    NonIntegerDegree,
    NotADerivation,
    NotAGrading,
    NotCommuting,
    NotGraded,
    NotSemisimple,
)
from levikit.linalg import (
    Matrix,
    Subspace,
    is_semisimple_rational,
    joint_eigenspaces,
    subspace_intersection,
    sum_all,
    unit_vector,
)
from levikit.reports import Report

Degree = Tuple[int, ...]


@dataclass(frozen=True)
class Grading:
    """Components ``(degree, subspace)`` sorted lexicographically by degree."""

    rank: int
    components: Tuple[Tuple[Degree, Subspace], ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted(((tuple(int(x) for x in d), s) for d, s in self.components), key=lambda c: c[0]))
        object.__setattr__(self, "components", comps)
        for degree, _ in comps:
            if len(degree) != self.rank:
                raise NotAGrading(f"degree {degree} does not have rank {self.rank}")

    @classmethod
    def from_degrees(cls, rank: int, degrees: Sequence[Sequence[int]]) -> "Grading":
        """Grading of an adapted basis: basis vector i has degree ``degrees[i]``."""
        n = len(degrees)
        groups: Dict[Degree, List[int]] = {}
        for i, d in enumerate(degrees):
            groups.setdefault(tuple(int(x) for x in d), []).append(i)
        return cls(rank, tuple((d, Subspace.span(n, [unit_vector(n, i) for i in idx])) for d, idx in groups.items()))

    @classmethod
    def trivial(cls, dim: int, rank: int = 1) -> "Grading":
        if dim == 0:
            return cls(rank, ())
        return cls(rank, (((0,) * rank, Subspace.full(dim)),))

    @property
    def ambient_dim(self) -> Optional[int]:
        return self.components[0][1].ambient_dim if self.components else None

    @property
    def degrees(self) -> Tuple[Degree, ...]:
        return tuple(d for d, _ in self.components)

    def component(self, degree: Sequence[int]) -> Optional[Subspace]:
        key = tuple(degree)
        return next((s for d, s in self.components if d == key), None)

    def basis_degrees(self) -> Optional[List[Degree]]:
        """Per-basis-vector degrees when every component is spanned by unit vectors."""
        n = self.ambient_dim
        if n is None:
            return []
        result: List[Optional[Degree]] = [None] * n
        for d, s in self.components:
            for v in s.vectors:
                support = [k for k, c in enumerate(v) if c]
                if len(support) != 1:
                    return None
                result[support[0]] = d
        if any(d is None for d in result):
            return None
        return result  # type: ignore[return-value]


@dataclass(frozen=True)
class DerivationFamily:
    """Commuting semisimple derivations of ``algebra`` (validated separately)."""

    algebra: LieAlgebra = field(repr=False, compare=False)
    matrices: Tuple[Matrix, ...] = ()
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrices", tuple(self.matrices))
        labels = tuple(self.labels) if self.labels else tuple(f"d{j}" for j in range(len(self.matrices)))
        object.__setattr__(self, "labels", labels)
        if len(self.labels) != len(self.matrices):
            raise DimensionMismatch(f"{len(self.labels)} labels for {len(self.matrices)} derivations")
        n = self.algebra.dim
        for m, label in zip(self.matrices, self.labels):
            if m.shape != (n, n):
                raise DimensionMismatch(f"derivation {label} has shape {m.shape}, expected {(n, n)}")

    @classmethod
    def empty(cls, g: LieAlgebra) -> "DerivationFamily":
        return cls(g, (), ())

    @classmethod
    def inner(cls, g: LieAlgebra, elements: Sequence[Sequence[Fraction]], labels: Sequence[str] = ()) -> "DerivationFamily":
        return cls(g, tuple(g.ad_matrix(x) for x in elements), tuple(labels))

    def __len__(self) -> int:
        return len(self.matrices)

    def is_empty(self) -> bool:
        return not self.matrices


def _component_lookup(grading: Grading) -> Dict[Degree, Subspace]:
    return {d: s for d, s in grading.components}


def validate_grading(g: LieAlgebra, grading: Grading) -> Report:
    """Direct-sum spanning and [g_m, g_n] ⊆ g_{m+n}; raises NotAGrading with the first violation."""
    n = g.dim
    degrees = grading.degrees
    if len(set(degrees)) != len(degrees):
        raise NotAGrading("degrees are not distinct")
    for d, s in grading.components:
        if s.ambient_dim != n:
            raise NotAGrading(f"component {d} lives in a {s.ambient_dim}-dimensional space, expected {n}")
        if s.is_zero():
            raise NotAGrading(f"component {d} is zero")
    total = sum_all(n, (s for _, s in grading.components))
    if sum(s.dim for _, s in grading.components) != n or not total.is_full():
        raise NotAGrading("components do not form a direct sum decomposition of the algebra")
    lookup = _component_lookup(grading)
    for (m, gm), (p, gp) in combinations_with_replacement(grading.components, 2):
        target_degree = tuple(a + b for a, b in zip(m, p))
        target = lookup.get(target_degree, Subspace.zero(n))
        for x in gm.vectors:
            for y in gp.vectors:
                if not target.contains(g.bracket(x, y)):
                    raise NotAGrading(
                        f"[g_{m}, g_{p}] is not contained in g_{target_degree}",
                        witness=(m, p),
                    )
    report = Report(subject="grading")
    report.add("direct_sum", True, f"{len(degrees)} components of rank {grading.rank}")
    report.add("bracket_compatible", True)
    return report


def grading_to_derivations(g: LieAlgebra, grading: Grading) -> DerivationFamily:
    """Matrix j acts on the degree-m component as the scalar m_j."""
    validate_grading(g, grading)
    n = g.dim
    if n == 0:
        return DerivationFamily(g, tuple(Matrix.zeros(0, 0) for _ in range(grading.rank)), tuple(f"deg{j}" for j in range(grading.rank)))
    columns = [v for _, s in grading.components for v in s.vectors]
    change = Matrix.from_columns(columns, n)
    inverse = change.inverse()
    matrices = []
    for j in range(grading.rank):
        diagonal = [d[j] for d, s in grading.components for _ in range(s.dim)]
        matrices.append(change @ Matrix.diagonal(diagonal) @ inverse)
    return DerivationFamily(g, tuple(matrices), tuple(f"deg{j}" for j in range(grading.rank)))


def derivations_to_grading(g: LieAlgebra, family: DerivationFamily) -> Grading:
    """Joint eigenspaces of the family, which must have integer weights."""
    require_valid_family(g, family)
    parts = joint_eigenspaces(family.matrices, g.dim)
    components = []
    for weight, space in parts:
        if any(w.denominator != 1 for w in weight):
            raise NonIntegerDegree(f"joint weight {tuple(str(w) for w in weight)} is not integral")
        components.append((tuple(int(w) for w in weight), space))
    return Grading(len(family), tuple(components))


def _family_failures(g: LieAlgebra, family: DerivationFamily) -> List[LeviKitError]:
    failures: List[LeviKitError] = []
    for m, label in zip(family.matrices, family.labels):
        if not is_derivation(g, m):
            failures.append(NotADerivation(f"{label} violates the derivation law"))
    ms = family.matrices
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if not ms[i].commutes_with(ms[j]):
                failures.append(NotCommuting(f"{family.labels[i]} and {family.labels[j]} do not commute"))
    for m, label in zip(family.matrices, family.labels):
        try:
            if not is_semisimple_rational(m):
                failures.append(NotSemisimple(f"{label} is not semisimple (minimal polynomial not squarefree)"))
        except IrrationalSpectrum as e:
            failures.append(IrrationalSpectrum(f"{label}: {e.message}"))
    return failures


def validate_family(g: LieAlgebra, family: DerivationFamily) -> Report:
    """Derivation law, pairwise commutation and rational semisimplicity; lists every failure."""
    report = Report(subject="derivation family")
    failures = _family_failures(g, family)
    by_kind = {
        "derivation": [f for f in failures if isinstance(f, NotADerivation)],
        "commuting": [f for f in failures if isinstance(f, NotCommuting)],
        "semisimple": [f for f in failures if isinstance(f, (NotSemisimple, IrrationalSpectrum))],
    }
    for name, found in by_kind.items():
        report.add(name, not found, "; ".join(str(f) for f in found) or None)
    return report


def require_valid_family(g: LieAlgebra, family: DerivationFamily) -> None:
    """Raise the first typed failure of ``validate_family``."""
    if family.algebra.dim != g.dim:
        raise DimensionMismatch(f"family of a {family.algebra.dim}-dimensional algebra used on a {g.dim}-dimensional one")
    failures = _family_failures(g, family)
    if failures:
        logger.debug(f"Derivation family rejected: {failures[0]}")
        raise failures[0]


def restrict_grading(g: LieAlgebra, grading: Grading, space: Subspace) -> List[Tuple[Degree, Subspace]]:
    """Components W ∩ g_m; W must be graded (their dimensions add up to dim W)."""
    pieces = []
    for d, s in grading.components:
        piece = subspace_intersection(space, s)
        if not piece.is_zero():
            pieces.append((d, piece))
    deficit = space.dim - sum(p.dim for _, p in pieces)
    if deficit:
        raise NotGraded(f"subspace is not graded: {deficit} dimension(s) missing from its homogeneous parts", deficit=deficit)
    return pieces


def transport_grading(grading: Grading, transform: Matrix) -> Grading:
    """Image of every component under an automorphism."""
    return Grading(grading.rank, tuple((d, s.image_under(transform)) for d, s in grading.components))


def transport_family(family: DerivationFamily, transform: Matrix, inverse: Matrix, algebra: Optional[LieAlgebra] = None) -> DerivationFamily:
    """T D T^-1 for each derivation D."""
    return DerivationFamily(
        algebra or family.algebra,
        tuple(transform @ m @ inverse for m in family.matrices),
        family.labels,
    )
