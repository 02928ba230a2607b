"""
Splitting invariant derivations along a Levi decomposition.

A derivation D preserving the Levi subalgebra l restricts to an inner derivation of l, so
``D = ad(H_l) + residual`` with ``H_l`` in l and ``residual`` vanishing on l. Over a whole
commuting family the inner parts commute, the residuals commute, and the residuals commute with
``ad(x)`` for every x in l.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from levikit.algebra import LieAlgebra, subalgebra
from levikit.errors import (
    AssertionFailed,
    NoInnerRepresentative,
    NonIntegerDegree,
    NotInvariant,
)
from levikit.gradings import DerivationFamily, Grading, derivations_to_grading
from levikit.levi import LeviCertificate
from levikit.linalg import (
    Matrix,
    Subspace,
    Vector,
    is_semisimple_rational,
    kernel,
    restrict_matrix,
    solve,
    vstack,
    zero_vector,
)


@dataclass(frozen=True)
class DerivationSplit:
    label: str
    H_l: Vector
    residual: Matrix


@dataclass(frozen=True)
class SplitResult:
    splits: Tuple[DerivationSplit, ...]
    inner_span: Subspace

    def __len__(self) -> int:
        return len(self.splits)

    @property
    def inner_parts(self) -> Tuple[Vector, ...]:
        return tuple(s.H_l for s in self.splits)

    @property
    def residuals(self) -> Tuple[Matrix, ...]:
        return tuple(s.residual for s in self.splits)


@dataclass(frozen=True)
class FactoredFamilies:
    """Inner parts as derivations of l, residuals as derivations of r."""

    levi_algebra: LieAlgebra
    levi_family: DerivationFamily
    radical_algebra: LieAlgebra
    radical_family: DerivationFamily
    levi_grading: Optional[Grading] = None
    radical_grading: Optional[Grading] = None


def split_derivation(g: LieAlgebra, levi: Subspace, derivation: Matrix) -> Tuple[Vector, Matrix]:
    """Unique H_l in levi with [H_l, x] = D x on levi, and the residual D - ad(H_l).

    Raises:
        NotInvariant: D does not preserve levi.
        NoInnerRepresentative: No H_l exists (levi is not semisimple).
    """
    if not levi.is_invariant_under(derivation):
        raise NotInvariant("the derivation does not preserve the Levi subalgebra")
    n = g.dim
    if levi.is_zero():
        return zero_vector(n), derivation
    columns = Matrix.from_columns(levi.vectors, n)
    # [H_l, x] = -ad(x) H_l for every basis vector x of levi
    system = vstack(*[(-g.ad_matrix(x)) @ columns for x in levi.vectors])
    target = tuple(c for x in levi.vectors for c in derivation.apply(x))
    coefficients = solve(system, target)
    if coefficients is None:
        raise NoInnerRepresentative("the derivation restricted to the Levi subalgebra is not inner")
    if not kernel(system).is_zero():
        raise AssertionFailed("the inner part is unique", "the Levi subalgebra has a nontrivial center")
    H_l = columns.apply(coefficients)
    residual = derivation - g.ad_matrix(H_l)
    if any(any(residual.apply(x)) for x in levi.vectors):
        raise AssertionFailed("the residual vanishes on the Levi subalgebra")
    return H_l, residual


def _require_commuting(ms: Sequence[Matrix], labels: Sequence[str], what: str) -> None:
    for i, j in combinations(range(len(ms)), 2):
        if not ms[i].commutes_with(ms[j]):
            raise AssertionFailed(f"[{what}({labels[i]}), {what}({labels[j]})] = 0")


def _require_semisimple(m: Matrix, claim: str) -> None:
    if not is_semisimple_rational(m):
        raise AssertionFailed(claim)


def split_family(g: LieAlgebra, cert: LeviCertificate, family: Optional[DerivationFamily] = None) -> SplitResult:
    """Split every derivation of the family and check the commutation structure.

    Raises:
        AssertionFailed: Naming the violated identity.
    """
    family = family if family is not None else cert.family
    if family is None or family.is_empty():
        return SplitResult((), Subspace.zero(g.dim))
    levi, rad = cert.levi, cert.radical
    splits: List[DerivationSplit] = []
    for d, label in zip(family.matrices, family.labels):
        H_l, residual = split_derivation(g, levi, d)
        splits.append(DerivationSplit(label, H_l, residual))

    labels = [s.label for s in splits]
    inner = [g.ad_matrix(s.H_l) for s in splits]
    residuals = [s.residual for s in splits]
    _require_commuting(inner, labels, "ad H_l")
    _require_commuting(residuals, labels, "residual")
    for i, a in enumerate(inner):
        for j, res in enumerate(residuals):
            if not a.commutes_with(res):
                raise AssertionFailed(f"[ad H_l({labels[i]}), residual({labels[j]})] = 0")
    for res, label in zip(residuals, labels):
        for x in levi.vectors:
            if not res.commutes_with(g.ad_matrix(x)):
                raise AssertionFailed(f"[residual({label}), ad(x)] = 0 for x in the Levi subalgebra")
        if not rad.is_invariant_under(res):
            raise AssertionFailed(f"residual({label}) preserves the radical")
        _require_semisimple(res, f"residual({label}) is semisimple")
    for a, label in zip(inner, labels):
        _require_semisimple(a, f"ad H_l({label}) is semisimple")
    for s, d in zip(splits, family.matrices):
        if g.ad_matrix(s.H_l) + s.residual != d:
            raise AssertionFailed(f"ad H_l({s.label}) + residual({s.label}) reconstructs the derivation")

    inner_span = Subspace.span(g.dim, [s.H_l for s in splits])
    for x, y in combinations(inner_span.vectors, 2):
        if any(g.bracket(x, y)):
            raise AssertionFailed("the inner parts span an abelian subalgebra")
    if not inner_span.is_subspace_of(levi):
        raise AssertionFailed("the inner parts lie in the Levi subalgebra")
    logger.debug(f"Split {len(splits)} derivation(s); inner parts span dimension {inner_span.dim}")
    return SplitResult(tuple(splits), inner_span)


def _grading_or_none(algebra: LieAlgebra, family: DerivationFamily) -> Optional[Grading]:
    if algebra.dim == 0:
        return None
    try:
        return derivations_to_grading(algebra, family)
    except NonIntegerDegree:
        return None


def factor_families(g: LieAlgebra, cert: LeviCertificate, split: SplitResult) -> FactoredFamilies:
    """Restrict the inner parts to the Levi subalgebra and the residuals to the radical.

    The residuals restricted to r commute with the action of l on r; the gradings are
    returned when the weights are integral.
    """
    levi, rad = cert.levi, cert.radical
    labels = tuple(s.label for s in split.splits)
    levi_algebra, _ = subalgebra(g, levi)
    radical_algebra, _ = subalgebra(g, rad)
    levi_matrices = tuple(restrict_matrix(g.ad_matrix(s.H_l), levi) for s in split.splits)
    radical_matrices = tuple(restrict_matrix(s.residual, rad) for s in split.splits)
    for x in levi.vectors:
        action = restrict_matrix(g.ad_matrix(x), rad)
        for m, label in zip(radical_matrices, labels):
            if not m.commutes_with(action):
                raise AssertionFailed(f"residual({label}) on r commutes with the action of l")
    levi_family = DerivationFamily(levi_algebra, levi_matrices, labels)
    radical_family = DerivationFamily(radical_algebra, radical_matrices, labels)
    return FactoredFamilies(
        levi_algebra,
        levi_family,
        radical_algebra,
        radical_family,
        _grading_or_none(levi_algebra, levi_family) if labels else None,
        _grading_or_none(radical_algebra, radical_family) if labels else None,
    )
