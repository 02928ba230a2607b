"""
Lie algebras given by structure constants.

A ``LieAlgebra`` stores ``[e_i, e_j] = sum_k c * e_k`` for ``i < j`` only; antisymmetry is
implied by the storage. Everything here works in the coordinates of the given basis.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from levikit.errors import (
    AssertionFailed,
    DimensionMismatch,
    NotADerivation,
    NotALieAlgebra,
    NotAnIdeal,
    NotASubalgebra,
    NotCommuting,
)
from levikit.linalg import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    Vector,
    as_fraction,
    is_zero,
    kernel,
    rank,
    solve,
    unit_vector,
    vstack,
    zero_vector,
)
from levikit.reports import Report

if TYPE_CHECKING:
    from levikit.gradings import DerivationFamily

StructureConstant = Tuple[int, int, int, Fraction]


def _normalise_structure(dim: int, entries: Iterable[Sequence]) -> Tuple[StructureConstant, ...]:
    merged: Dict[Tuple[int, int, int], Fraction] = {}
    for i, j, k, c in entries:
        i, j, k, c = int(i), int(j), int(k), as_fraction(c)
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise DimensionMismatch(f"structure constant ({i}, {j}, {k}) outside a {dim}-dimensional algebra")
        if i == j:
            if c != 0:
                raise NotALieAlgebra(f"[e_{i}, e_{i}] must vanish")
            continue
        if i > j:
            i, j, c = j, i, -c
        merged[(i, j, k)] = merged.get((i, j, k), ZERO) + c
    return tuple(sorted((i, j, k, c) for (i, j, k), c in merged.items() if c != 0))


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra over Q by sparse structure constants."""

    dim: int
    names: Tuple[str, ...]
    structure: Tuple[StructureConstant, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.dim:
            raise DimensionMismatch(f"{len(self.names)} basis names for a {self.dim}-dimensional algebra")
        object.__setattr__(self, "structure", _normalise_structure(self.dim, self.structure))

    @classmethod
    def from_table(cls, names: Sequence[str], table: Mapping[Tuple[int, int], Sequence]) -> "LieAlgebra":
        """Build from ``{(i, j): [e_i, e_j]}`` given as coordinate vectors."""
        entries = []
        for (i, j), v in table.items():
            for k, c in enumerate(v):
                if c:
                    entries.append((i, j, k, c))
        return cls(len(names), tuple(names), tuple(entries))

    @cached_property
    def _table(self) -> Dict[Tuple[int, int], Vector]:
        table: Dict[Tuple[int, int], List[Fraction]] = {}
        for i, j, k, c in self.structure:
            table.setdefault((i, j), [ZERO] * self.dim)[k] += c
        return {key: tuple(v) for key, v in table.items()}

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vector(self.dim))
        return tuple(-c for c in self._table.get((j, i), zero_vector(self.dim)))

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"bracket of vectors of lengths {len(x)}, {len(y)} in a {self.dim}-dimensional algebra")
        acc = [ZERO] * self.dim
        for i, j, k, c in self.structure:
            coefficient = x[i] * y[j] - x[j] * y[i]
            if coefficient:
                acc[k] += coefficient * c
        return tuple(acc)

    def ad_matrix(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> [x, y]; column j is [x, e_j]."""
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} in a {self.dim}-dimensional algebra")
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for i, j, k, c in self.structure:
            if x[i]:
                rows[k][j] += c * x[i]
            if x[j]:
                rows[k][i] -= c * x[j]
        return Matrix(rows, ncols=self.dim)

    @cached_property
    def basis_ad(self) -> Tuple[Matrix, ...]:
        return tuple(self.ad_matrix(unit_vector(self.dim, i)) for i in range(self.dim))

    def unit(self, name: str) -> Vector:
        return unit_vector(self.dim, self.names.index(name))

    def element(self, **coefficients) -> Vector:
        """Vector from basis-name keyword coefficients, e.g. ``g.element(h=1, e=-2)``."""
        v = [ZERO] * self.dim
        for name, c in coefficients.items():
            v[self.names.index(name)] = as_fraction(c)
        return tuple(v)


@dataclass(frozen=True)
class AlgebraMap:
    """A linear map between algebras, ``matrix`` of shape (target.dim, source.dim)."""

    source: LieAlgebra = field(repr=False)
    target: LieAlgebra = field(repr=False)
    matrix: Matrix
    homomorphism: bool = False

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(f"map matrix {self.matrix.shape} for {self.source.dim} -> {self.target.dim}")
        if self.homomorphism and not self.is_homomorphism():
            raise AssertionFailed("the map preserves brackets")

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def is_homomorphism(self) -> bool:
        n = self.source.dim
        for i, j in combinations(range(n), 2):
            lhs = self.apply(self.source.basis_bracket(i, j))
            rhs = self.target.bracket(self.matrix.column(i), self.matrix.column(j))
            if lhs != rhs:
                return False
        return True


@dataclass(frozen=True)
class QuotientData:
    quotient: LieAlgebra
    projection: AlgebraMap
    section: AlgebraMap
    ideal: Subspace

    def lift(self, space: Subspace) -> Subspace:
        """Preimage of a quotient subspace: section(space) + ideal."""
        n = self.projection.source.dim
        vectors = [self.section.apply(v) for v in space.vectors] + list(self.ideal.vectors)
        return Subspace.span(n, vectors)


@dataclass(frozen=True)
class Extension:
    """g1 = g + a with a commuting and acting on g by the given derivations."""

    algebra: LieAlgebra
    inclusion: AlgebraMap
    adjoined: Tuple[int, ...]
    matrices: Tuple[Matrix, ...]


def validate(g: LieAlgebra) -> Report:
    """Check the Jacobi identity on every basis triple."""
    for i, j, k in combinations(range(g.dim), 3):
        ei, ej, ek = (unit_vector(g.dim, m) for m in (i, j, k))
        total = [ZERO] * g.dim
        for x, y, z in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            term = g.bracket(x, g.bracket(y, z))
            total = [a + b for a, b in zip(total, term)]
        if not is_zero(total):
            names = (g.names[i], g.names[j], g.names[k])
            raise NotALieAlgebra(f"Jacobi identity fails on {names}", witness=(i, j, k))
    report = Report(subject="algebra")
    report.add("jacobi", True, f"{g.dim}-dimensional, {len(g.structure)} structure constants")
    return report


def _check_ambient(g: LieAlgebra, *spaces: Subspace) -> None:
    for s in spaces:
        if s.ambient_dim != g.dim:
            raise DimensionMismatch(f"subspace of a {s.ambient_dim}-dimensional space in a {g.dim}-dimensional algebra")


def bracket_subspaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(g, a, b)
    return Subspace.span(g.dim, [g.bracket(x, y) for x in a.vectors for y in b.vectors])


def is_subalgebra(g: LieAlgebra, a: Subspace) -> bool:
    _check_ambient(g, a)
    vs = a.vectors
    return all(a.contains(g.bracket(vs[s], vs[t])) for s in range(len(vs)) for t in range(s + 1, len(vs)))


def is_ideal(g: LieAlgebra, a: Subspace) -> bool:
    _check_ambient(g, a)
    return all(a.contains(ad.apply(v)) for ad in g.basis_ad for v in a.vectors)


def _require_subalgebra(g: LieAlgebra, a: Subspace) -> None:
    if not is_subalgebra(g, a):
        raise NotASubalgebra("subspace is not closed under the bracket")


def derived_series(g: LieAlgebra, a: Optional[Subspace] = None) -> List[Subspace]:
    a = a if a is not None else Subspace.full(g.dim)
    _require_subalgebra(g, a)
    series = [a]
    while True:
        nxt = bracket_subspaces(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.is_zero():
            return series


def is_solvable(g: LieAlgebra, a: Optional[Subspace] = None) -> bool:
    return derived_series(g, a)[-1].is_zero()


def lower_central_series(g: LieAlgebra, a: Optional[Subspace] = None) -> List[Subspace]:
    a = a if a is not None else Subspace.full(g.dim)
    _require_subalgebra(g, a)
    series = [a]
    while True:
        nxt = bracket_subspaces(g, a, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.is_zero():
            return series


def is_nilpotent_algebra(g: LieAlgebra, a: Optional[Subspace] = None) -> bool:
    return lower_central_series(g, a)[-1].is_zero()


def killing_form(g: LieAlgebra) -> Matrix:
    """kappa_ij = trace(ad(e_i) ad(e_j))."""
    ads = [ad.rows for ad in g.basis_ad]
    n = g.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a, b = ads[i], ads[j]
            value = sum((a[k][l] * b[l][k] for k in range(n) for l in range(n) if a[k][l] and b[l][k]), ZERO)
            rows[i][j] = rows[j][i] = value
    return Matrix(rows, ncols=n)


def is_semisimple_algebra(g: LieAlgebra, a: Optional[Subspace] = None) -> bool:
    """Cartan's criterion: the Killing form of the (sub)algebra is nondegenerate."""
    if a is None:
        h = g
    else:
        h, _ = subalgebra(g, a)
    return rank(killing_form(h)) == h.dim


def center(g: LieAlgebra) -> Subspace:
    if g.dim == 0:
        return Subspace.zero(0)
    return kernel(vstack(*g.basis_ad))


def radical(g: LieAlgebra) -> Subspace:
    """Killing-orthogonal of [g, g], checked to be a solvable ideal with semisimple quotient."""
    n = g.dim
    full = Subspace.full(n)
    derived = bracket_subspaces(g, full, full)
    if derived.is_zero():
        return full
    form = killing_form(g)
    constraints = Matrix([form.apply(d) for d in derived.vectors], ncols=n)
    r = kernel(constraints)
    if not is_ideal(g, r):
        raise AssertionFailed("the radical is an ideal")
    if not is_solvable(g, r):
        raise AssertionFailed("the radical is solvable")
    if not r.is_full():
        q = quotient(g, r).quotient
        if rank(killing_form(q)) != q.dim:
            raise AssertionFailed("the quotient by the radical is semisimple")
    return r


def subalgebra(g: LieAlgebra, a: Subspace) -> Tuple[LieAlgebra, AlgebraMap]:
    """Structure constants of a subalgebra in its canonical basis, with the inclusion."""
    _require_subalgebra(g, a)
    vs = a.vectors
    table = {}
    for s, t_ in combinations(range(len(vs)), 2):
        table[(s, t_)] = a.coordinates(g.bracket(vs[s], vs[t_]))
    names = [_basis_name(g, v, s) for s, v in enumerate(vs)]
    sub_algebra = LieAlgebra.from_table(names, table)
    inclusion = AlgebraMap(sub_algebra, g, Matrix.from_columns(vs, g.dim), homomorphism=True)
    return sub_algebra, inclusion


def _basis_name(g: LieAlgebra, v: Vector, index: int) -> str:
    support = [k for k, c in enumerate(v) if c]
    if len(support) == 1 and v[support[0]] == ONE:
        return g.names[support[0]]
    return f"b{index}"


def quotient(g: LieAlgebra, ideal: Subspace) -> QuotientData:
    """g/i with the section fixed on the non-pivot coordinates of i."""
    _check_ambient(g, ideal)
    if not is_ideal(g, ideal):
        raise NotAnIdeal("subspace is not an ideal")
    n = g.dim
    complement = ideal.complement_coordinates()
    m = len(complement)

    def project(v: Sequence[Fraction]) -> Vector:
        w = ideal.reduce(v)
        return tuple(w[c] for c in complement)

    section_columns = [unit_vector(n, c) for c in complement]
    table = {}
    for s, t_ in combinations(range(m), 2):
        table[(s, t_)] = project(g.bracket(section_columns[s], section_columns[t_]))
    q = LieAlgebra.from_table([g.names[c] for c in complement], table)
    projection = AlgebraMap(g, q, Matrix.from_columns([project(unit_vector(n, j)) for j in range(n)], m), homomorphism=True)
    section = AlgebraMap(q, g, Matrix.from_columns(section_columns, n))
    return QuotientData(q, projection, section, ideal)


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    """D[x, y] = [Dx, y] + [x, Dy] on every basis pair."""
    if d.shape != (g.dim, g.dim):
        return False
    for i, j in combinations(range(g.dim), 2):
        di, dj = d.column(i), d.column(j)
        lhs = d.apply(g.basis_bracket(i, j))
        rhs = [a + b for a, b in zip(g.bracket(di, unit_vector(g.dim, j)), g.bracket(unit_vector(g.dim, i), dj))]
        if list(lhs) != rhs:
            return False
    return True


def inner_representative(g: LieAlgebra, d: Matrix) -> Optional[Vector]:
    """Some z with ad(z) = D (least-pivot), or None when D is outer."""
    if g.dim == 0:
        return ()
    columns = [ad.flatten() for ad in g.basis_ad]
    return solve(Matrix.from_columns(columns, g.dim * g.dim), d.flatten())


def automorphism_exp(g: LieAlgebra, x: Sequence[Fraction]) -> Matrix:
    """exp(ad x) for ad x nilpotent; equals id + ad x when ad(x)^2 = 0."""
    ad = g.ad_matrix(x)
    n = g.dim
    result = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, n + 1):
        term = (term @ ad).scale(Fraction(1, k))
        if term.is_zero():
            return result
        result = result + term
    if not (term @ ad).is_zero():
        raise AssertionFailed("ad(x) is nilpotent")
    return result


def is_automorphism(g: LieAlgebra, m: Matrix) -> bool:
    if m.shape != (g.dim, g.dim) or rank(m) != g.dim:
        return False
    for i, j in combinations(range(g.dim), 2):
        if m.apply(g.basis_bracket(i, j)) != g.bracket(m.column(i), m.column(j)):
            return False
    return True


def semidirect_extend(
    g: LieAlgebra,
    family: "DerivationFamily",
) -> Extension:
    """g1 = g + a: adjoined elements commute and act on g by the family's derivations.

    Linearly dependent derivations are dropped first (the first of each dependent run is kept).
    """
    n = g.dim
    kept: List[Matrix] = []
    labels: List[str] = []
    for d, label in zip(family.matrices, family.labels):
        if not is_derivation(g, d):
            raise NotADerivation(f"{label} is not a derivation")
        if rank(Matrix([m.flatten() for m in kept + [d]], ncols=n * n)) > len(kept):
            kept.append(d)
            labels.append(label)
    for s, t_ in combinations(range(len(kept)), 2):
        if not kept[s].commutes_with(kept[t_]):
            raise NotCommuting(f"{labels[s]} and {labels[t_]} do not commute")

    dim = n + len(kept)
    entries = [(i, j, k, c) for i, j, k, c in g.structure]
    for a, d in enumerate(kept):
        h = n + a
        for j in range(n):
            # [e_j, H] = -D e_j
            for k, c in enumerate(d.column(j)):
                if c:
                    entries.append((j, h, k, -c))
    used = set(g.names)
    adjoined_names = []
    for label in labels:
        name = f"ad[{label}]"
        while name in used:
            name += "'"
        used.add(name)
        adjoined_names.append(name)
    g1 = LieAlgebra(dim, g.names + tuple(adjoined_names), tuple(entries))
    inclusion = AlgebraMap(g, g1, Matrix.from_columns([unit_vector(dim, j) for j in range(n)], dim), homomorphism=True)
    logger.debug(f"Extended a {n}-dimensional algebra by {len(kept)} derivation(s)")
    return Extension(g1, inclusion, tuple(range(n, dim)), tuple(kept))


def span_images(m: AlgebraMap, space: Subspace) -> Subspace:
    return Subspace.span(m.target.dim, [m.apply(v) for v in space.vectors])
