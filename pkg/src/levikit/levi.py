"""
Levi decompositions, classical and invariant under a commuting family of semisimple derivations.

``classical_levi`` is the cocycle construction on the derived series of the radical. The
invariant version adjoins the derivations as inner ones (``semidirect_extend``) and runs the
case ladder of ``_inner_ladder`` on the extension:

* radical zero: the algebra is its own Levi subalgebra;
* Case 1: pass to the quotient by a smaller ideal ``i`` of the radical and solve again on the
  preimage ``h`` of the quotient's Levi subalgebra;
* Case 2a: the radical is central and the Levi subalgebra is ``[g, g]``;
* Case 2b: the radical is abelian with ``[g, r] = r``; a classical Levi subalgebra is moved by
  ``exp(ad X) = id + ad X`` until it contains a generic element of the family.

Every result is re-checked by ``verify_certificate`` before it is returned.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from levikit.algebra import (
    LieAlgebra,
    bracket_subspaces,
    center,
    inner_representative,
    is_automorphism,
    is_subalgebra,
    killing_form,
    quotient,
    radical,
    semidirect_extend,
    span_images,
    subalgebra,
)
from levikit.config import EngineConfig, config
from levikit.errors import (
    AssertionFailed,
    DepthCapExceeded,
    InconsistentCocycle,
    PreconditionViolated,
)
from levikit.gradings import (
    Degree,
    DerivationFamily,
    Grading,
    grading_to_derivations,
    require_valid_family,
    restrict_grading,
)
from levikit.linalg import (
    ZERO,
    Matrix,
    Subspace,
    Vector,
    combine,
    components_of,
    image,
    is_semisimple_rational,
    is_zero,
    joint_eigenspaces,
    kernel,
    rank,
    restrict_matrix,
    solve,
    sub,
    subspace_intersection,
    unit_vector,
)
from levikit.reports import Report


class CaseLabel(str, Enum):
    SEMISIMPLE = "Semisimple"
    CASE1 = "Case1"
    CASE2A = "Case2a"
    CASE2B = "Case2b"
    EXTEND = "Extend"

    @property
    def display(self) -> str:
        return {
            CaseLabel.SEMISIMPLE: "Semisimple",
            CaseLabel.CASE1: "Case 1",
            CaseLabel.CASE2A: "Case 2a",
            CaseLabel.CASE2B: "Case 2b",
            CaseLabel.EXTEND: "Extend",
        }[self]


@dataclass(frozen=True)
class CaseStep:
    """One step of the case ladder, in the coordinates of the algebra handled at that depth."""

    case_label: CaseLabel
    algebra_dim: int
    depth: int = 0
    ideal_used: Optional[Subspace] = None
    generic_H: Optional[Vector] = None
    detail: Optional[str] = None

    def describe(self) -> str:
        text = f"{'  ' * self.depth}{self.case_label.display} (dim {self.algebra_dim})"
        if self.ideal_used is not None:
            text += f", ideal of dim {self.ideal_used.dim}"
        if self.detail:
            text += f": {self.detail}"
        return text


@dataclass(frozen=True)
class Case2bCorrection:
    """H = H_l + H_r, H_r = H_0 - ad(H)X, corrected_levi = (id + ad X)(levi)."""

    H: Vector
    H_l: Vector
    H_r: Vector
    H_0: Vector
    X: Vector
    corrected_levi: Subspace

    @property
    def is_trivial(self) -> bool:
        return is_zero(self.X)


@dataclass(frozen=True)
class RootDecomposition:
    """Joint eigenspaces of the family restricted to the radical, roots in lexicographic order."""

    roots: Tuple[Tuple[Vector, Subspace], ...]

    def nonzero_roots(self) -> List[Vector]:
        return [alpha for alpha, _ in self.roots if not is_zero(alpha)]

    def space(self, alpha: Sequence[Fraction]) -> Optional[Subspace]:
        key = tuple(alpha)
        return next((s for a, s in self.roots if a == key), None)


@dataclass(frozen=True)
class LeviCertificate:
    levi: Subspace
    radical: Subspace
    family: Optional[DerivationFamily] = None
    trace: Tuple[CaseStep, ...] = ()
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def matrices(self) -> Tuple[Matrix, ...]:
        return self.family.matrices if self.family is not None else ()


@dataclass(frozen=True)
class GradedLevi:
    certificate: LeviCertificate
    levi_components: Tuple[Tuple[Degree, Subspace], ...]
    radical_components: Tuple[Tuple[Degree, Subspace], ...]


def is_levi_subalgebra(g: LieAlgebra, levi: Subspace, rad: Optional[Subspace] = None) -> bool:
    """Semisimple subalgebra complementing the radical."""
    rad = rad if rad is not None else radical(g)
    if levi.ambient_dim != g.dim or levi.dim + rad.dim != g.dim:
        return False
    if not is_subalgebra(g, levi):
        return False
    if not subspace_intersection(levi, rad).is_zero():
        return False
    sub_algebra, _ = subalgebra(g, levi)
    return rank(killing_form(sub_algebra)) == sub_algebra.dim


def _induced_on_quotient(q, d: Matrix) -> Matrix:
    return q.projection.matrix @ d @ q.section.matrix


def _abelian_radical_complement(g: LieAlgebra, r: Subspace, matrices: Sequence[Matrix]) -> Subspace:
    """Graph of sigma + phi over g/r, phi: g/r -> r solving the cocycle (and invariance) equations.

    Unknown (a, k) is the coefficient of the k-th radical basis vector in phi(e_a).
    """
    n = g.dim
    q = quotient(g, r)
    s = q.quotient
    m, p = s.dim, r.dim
    sigma = q.section.matrix
    radical_basis = r.vectors
    unknowns = m * p
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []

    def block() -> List[List[Fraction]]:
        return [[ZERO] * unknowns for _ in range(n)]

    def add_column(target: List[List[Fraction]], column: int, v: Sequence[Fraction], c: Fraction = Fraction(1)) -> None:
        for row, x in zip(target, v):
            if x:
                row[column] += c * x

    # [sigma a, phi b] - [sigma b, phi a] - phi([a, b]) = -([sigma a, sigma b] - sigma [a, b])
    for a, b in combinations(range(m), 2):
        eq = block()
        sa, sb = sigma.column(a), sigma.column(b)
        ad_a, ad_b = g.ad_matrix(sa), g.ad_matrix(sb)
        beta = s.basis_bracket(a, b)
        for k, rk in enumerate(radical_basis):
            add_column(eq, b * p + k, ad_a.apply(rk))
            add_column(eq, a * p + k, ad_b.apply(rk), Fraction(-1))
            for c, coefficient in enumerate(beta):
                if coefficient:
                    add_column(eq, c * p + k, rk, -coefficient)
        defect = sub(g.bracket(sa, sb), sigma.apply(beta))
        rows.extend(eq)
        rhs.extend(-x for x in defect)

    # D phi(a) - phi(Dbar a) = sigma Dbar a - D sigma a
    for d in matrices:
        d_bar = _induced_on_quotient(q, d)
        for a in range(m):
            eq = block()
            for k, rk in enumerate(radical_basis):
                add_column(eq, a * p + k, d.apply(rk))
                for c in range(m):
                    if d_bar[c, a]:
                        add_column(eq, c * p + k, rk, -d_bar[c, a])
            target = sub(sigma.apply(d_bar.column(a)), d.apply(sigma.column(a)))
            rows.extend(eq)
            rhs.extend(target)

    if not rows:
        solution: Optional[Vector] = (ZERO,) * unknowns
    else:
        solution = solve(Matrix(rows, ncols=unknowns), rhs)
    if solution is None:
        raise InconsistentCocycle(
            f"no complement solves the cocycle equations ({len(matrices)} invariance constraint(s))"
        )
    vectors = []
    for a in range(m):
        phi_a = combine(solution[a * p:(a + 1) * p], radical_basis, n)
        vectors.append(tuple(x + y for x, y in zip(sigma.column(a), phi_a)))
    return Subspace.span(n, vectors)


def _levi_complement(g: LieAlgebra, matrices: Sequence[Matrix] = ()) -> Subspace:
    """Levi subalgebra invariant under ``matrices`` (any Levi subalgebra when empty)."""
    n = g.dim
    r = radical(g)
    if r.is_zero():
        return Subspace.full(n)
    if r.is_full():
        return Subspace.zero(n)
    derived = bracket_subspaces(g, r, r)
    if derived.is_zero():
        return _abelian_radical_complement(g, r, matrices)
    q = quotient(g, derived)
    quotient_levi = _levi_complement(q.quotient, [_induced_on_quotient(q, d) for d in matrices])
    h = q.lift(quotient_levi)
    h_algebra, inclusion = subalgebra(g, h)
    logger.debug(f"Cocycle recursion: dim {n} -> preimage of dim {h.dim} with radical of dim {derived.dim}")
    inner = _levi_complement(h_algebra, [restrict_matrix(d, h) for d in matrices])
    return span_images(inclusion, inner)


def classical_levi(g: LieAlgebra) -> Subspace:
    """Some Levi subalgebra of g.

    Recurses on the derived series of the radical; when the radical is abelian the complement is
    the graph of a correction ``phi: g/r -> r`` of the coordinate section solving the cocycle
    equations over all basis pairs.

    Raises:
        InconsistentCocycle: The linear system has no solution (never for a valid algebra).
    """
    levi = _levi_complement(g)
    logger.debug(f"Classical Levi subalgebra of dimension {levi.dim} in dimension {g.dim}")
    return levi


def invariant_complement(g: LieAlgebra, family: DerivationFamily) -> Subspace:
    """Levi subalgebra invariant under the family, by stacking invariance onto the cocycle equations."""
    return _levi_complement(g, family.matrices)


def root_space_decomposition(g: LieAlgebra, r: Subspace, family: DerivationFamily) -> RootDecomposition:
    """Joint eigenspaces of the family restricted to ``r``, returned in the coordinates of g."""
    if r.is_zero():
        return RootDecomposition(())
    restricted = [restrict_matrix(d, r) for d in family.matrices]
    parts = joint_eigenspaces(restricted, r.dim)
    roots = []
    for alpha, space in parts:
        roots.append((alpha, Subspace.span(g.dim, [r.from_coordinates(v) for v in space.vectors])))
    return RootDecomposition(tuple(roots))


def generic_element(roots: RootDecomposition, family: DerivationFamily) -> Vector:
    """First t = (1, s, s^2, ...) for s = 1, 2, ... with alpha(t) != 0 for every nonzero root."""
    d = len(family)
    nonzero = roots.nonzero_roots()
    s = 1
    while True:
        t = tuple(Fraction(s) ** j for j in range(d))
        if all(sum((a * x for a, x in zip(alpha, t)), ZERO) != 0 for alpha in nonzero):
            return t
        s += 1


def case2b_correct(g: LieAlgebra, levi: Subspace, r: Subspace, H: Sequence[Fraction]) -> Case2bCorrection:
    """Move ``levi`` by id + ad X, X in r, so that the result contains H.

    Args:
        g: The algebra, with abelian radical r satisfying [g, r] = r and trivial center.
        levi: Any Levi subalgebra of g.
        r: The radical of g.
        H: Element with ad(H) diagonalisable over Q.

    Returns:
        Case2bCorrection: The decomposition of H and the corrected Levi subalgebra.

    Raises:
        PreconditionViolated: A precondition does not hold; the exception names it.
        AssertionFailed: A postcondition of the correction does not hold.
    """
    n = g.dim
    H = tuple(H)
    full = Subspace.full(n)
    if not bracket_subspaces(g, r, r).is_zero():
        raise PreconditionViolated("the radical is abelian")
    if bracket_subspaces(g, full, r) != r:
        raise PreconditionViolated("[g, r] = r")
    if not center(g).is_zero():
        raise PreconditionViolated("the center of g is zero")
    ad_H = g.ad_matrix(H)
    if not is_semisimple_rational(ad_H):
        raise PreconditionViolated("ad(H) is semisimple")
    if radical(g) != r or not is_levi_subalgebra(g, levi, r):
        raise PreconditionViolated("levi is a Levi subalgebra complementing r")

    H_l, H_r = components_of(H, [levi, r])
    on_radical = restrict_matrix(ad_H, r)
    kernel_part = kernel(on_radical)
    image_part = image(on_radical)
    c0, cy = components_of(r.coordinates(H_r), [kernel_part, image_part])
    H_0 = r.from_coordinates(c0)

    # ad(H) X = H_0 - H_r = -Y with X in the image of ad(H) on r
    if image_part.is_zero():
        x_coordinates = (ZERO,) * r.dim
    else:
        image_columns = Matrix.from_columns(image_part.vectors, r.dim)
        z = solve(on_radical @ image_columns, tuple(-c for c in cy))
        if z is None:
            raise AssertionFailed("ad(H) is invertible on its image in r")
        x_coordinates = image_columns.apply(z)
    X = r.from_coordinates(x_coordinates)

    ad_X = g.ad_matrix(X)
    if not (ad_X @ ad_X).is_zero():
        raise AssertionFailed("ad(X)^2 = 0")
    automorphism = Matrix.identity(n) + ad_X
    if not is_automorphism(g, automorphism):
        raise AssertionFailed("id + ad(X) is an automorphism of g")
    corrected = levi.image_under(automorphism)
    if not corrected.contains(H):
        raise AssertionFailed("H lies in the corrected Levi subalgebra")
    if not is_levi_subalgebra(g, corrected, r):
        raise AssertionFailed("the corrected subspace is a Levi subalgebra")
    if not corrected.is_invariant_under(ad_H):
        raise AssertionFailed("ad(H) preserves the corrected Levi subalgebra")
    logger.debug(f"Case 2b correction in dim {n}: X {'= 0' if is_zero(X) else '!= 0'}")
    return Case2bCorrection(H, H_l, H_r, H_0, X, corrected)


def _zero_weight_part(v: Vector, parts: Sequence[Tuple[Vector, Subspace]]) -> Vector:
    if not parts:
        return v
    pieces = components_of(v, [s for _, s in parts])
    for (weight, _), piece in zip(parts, pieces):
        if is_zero(weight):
            return piece
    return (ZERO,) * len(v)


class _Ladder:
    """State of one run of the case ladder: trace and depth cap."""

    def __init__(self, cap: int):
        self.cap = cap
        self.trace: List[CaseStep] = []

    def record(self, step: CaseStep) -> None:
        logger.debug(f"Case ladder: {step.describe().strip()}")
        self.trace.append(step)

    def run(self, g: LieAlgebra, a_basis: Sequence[Vector], depth: int) -> Subspace:
        if depth > self.cap:
            raise DepthCapExceeded(f"recursion depth {depth} exceeds the cap {self.cap}")
        n = g.dim
        full = Subspace.full(n)
        r = radical(g)
        if r.is_zero():
            self.record(CaseStep(CaseLabel.SEMISIMPLE, n, depth))
            return full

        derived_radical = bracket_subspaces(g, r, r)
        if not derived_radical.is_zero():
            return self._case1(g, a_basis, derived_radical, depth, "i = [r, r]")
        g_on_r = bracket_subspaces(g, full, r)
        if g_on_r.is_zero():
            self.record(CaseStep(CaseLabel.CASE2A, n, depth, detail="l = [g, g]"))
            return bracket_subspaces(g, full, full)
        if g_on_r != r:
            return self._case1(g, a_basis, g_on_r, depth, "i = [g, r]")
        return self._case2b(g, a_basis, r, depth)

    def _case1(self, g: LieAlgebra, a_basis: Sequence[Vector], ideal: Subspace, depth: int, which: str) -> Subspace:
        n = g.dim
        step_index = len(self.trace)
        self.record(CaseStep(CaseLabel.CASE1, n, depth, ideal_used=ideal, detail=which))
        q = quotient(g, ideal)
        images = [q.projection.apply(a) for a in a_basis]
        quotient_levi = self.run(q.quotient, images, depth + 1)
        if quotient_levi.is_zero():
            return Subspace.zero(n)
        h = q.lift(quotient_levi)
        levi, branch = self._levi_of_preimage(g, a_basis, h, depth)
        step = self.trace[step_index]
        self.trace[step_index] = CaseStep(step.case_label, n, depth, ideal, detail=f"{which}; {branch}")
        return levi

    def _levi_of_preimage(self, g: LieAlgebra, a_basis: Sequence[Vector], h: Subspace, depth: int) -> Tuple[Subspace, str]:
        """Levi subalgebra of h invariant under ad(a)|_h, mapped back into g."""
        n = g.dim
        h_algebra, inclusion = subalgebra(g, h)
        restricted = [restrict_matrix(g.ad_matrix(a), h) for a in a_basis]

        representatives = [inner_representative(h_algebra, m) for m in restricted]
        if all(b is not None for b in representatives):
            parts = joint_eigenspaces(restricted, h.dim) if restricted else []
            zero_weight = [_zero_weight_part(b, parts) for b in representatives]
            levi = self.run(h_algebra, zero_weight, depth + 1)
            return span_images(inclusion, levi), "inner on h"

        enlarged = Subspace.span(n, list(h.vectors) + list(a_basis))
        if not enlarged.is_full():
            e_algebra, e_inclusion = subalgebra(g, enlarged)
            coordinates = [enlarged.coordinates(a) for a in a_basis]
            levi = span_images(e_inclusion, self.run(e_algebra, coordinates, depth + 1))
            if not levi.is_subspace_of(h):
                raise AssertionFailed("the Levi subalgebra of h + a lies in h")
            return levi, "inner on h + a"

        family = DerivationFamily(h_algebra, tuple(restricted))
        return span_images(inclusion, invariant_complement(h_algebra, family)), "invariant complement"

    def _case2b(self, g: LieAlgebra, a_basis: Sequence[Vector], r: Subspace, depth: int) -> Subspace:
        n = g.dim
        levi = classical_levi(g)
        family = DerivationFamily.inner(g, a_basis)
        roots = root_space_decomposition(g, r, family)
        t = generic_element(roots, family)
        H = combine(t, a_basis, n)
        correction = case2b_correct(g, levi, r, H)
        corrected = correction.corrected_levi
        for a in a_basis:
            if not corrected.contains(a):
                raise AssertionFailed("every element of a lies in the corrected Levi subalgebra")
        self.record(
            CaseStep(
                CaseLabel.CASE2B,
                n,
                depth,
                generic_H=H,
                detail=f"{len(roots.nonzero_roots())} nonzero root(s), correction {'trivial' if correction.is_trivial else 'applied'}",
            )
        )
        return corrected


def depth_cap(dim: int, family_size: int, engine: Optional[EngineConfig] = None) -> int:
    return (engine or config.engine).depth_cap(dim, family_size)


def inner_invariant_levi(
    g: LieAlgebra,
    a_basis: Sequence[Sequence[Fraction]],
    engine: Optional[EngineConfig] = None,
) -> Tuple[Subspace, List[CaseStep]]:
    """Levi subalgebra invariant under ad(a) for every a in an abelian, ad-semisimple ``a_basis``.

    Raises:
        PreconditionViolated: ``a_basis`` is not abelian or some ad(a) is not semisimple.
        DepthCapExceeded: The recursion went deeper than the configured cap.
    """
    a_basis = [tuple(a) for a in a_basis]
    for x, y in combinations(a_basis, 2):
        if not is_zero(g.bracket(x, y)):
            raise PreconditionViolated("a_basis spans an abelian subalgebra")
    for a in a_basis:
        if not is_semisimple_rational(g.ad_matrix(a)):
            raise PreconditionViolated("ad(a) is semisimple for every a in a_basis")
    ladder = _Ladder(depth_cap(g.dim, len(a_basis), engine))
    levi = ladder.run(g, a_basis, 0)
    return levi, ladder.trace


def _verification_checks(g: LieAlgebra, levi: Subspace, rad: Subspace, matrices: Sequence[Matrix]) -> Report:
    report = Report(subject="levi certificate")
    n = g.dim
    if levi.ambient_dim != n or rad.ambient_dim != n or any(m.shape != (n, n) for m in matrices):
        for name in ("subalgebra", "killing_nondegenerate", "radical", "complement", "invariance"):
            report.add(name, False, f"dimensions do not match a {n}-dimensional algebra")
        return report

    closed = is_subalgebra(g, levi)
    report.add("subalgebra", closed, None if closed else "levi is not closed under the bracket")
    if closed:
        levi_algebra, _ = subalgebra(g, levi)
        nondegenerate = rank(killing_form(levi_algebra)) == levi.dim
        report.add("killing_nondegenerate", nondegenerate, None if nondegenerate else "Killing form of levi is degenerate")
    else:
        report.add("killing_nondegenerate", False, "levi is not a subalgebra")

    actual = radical(g)
    matches = actual == rad
    report.add("radical", matches, None if matches else f"radical has dimension {actual.dim}, certificate claims {rad.dim}")

    meet = subspace_intersection(levi, rad)
    complement = meet.is_zero() and levi.dim + rad.dim == n
    report.add(
        "complement",
        complement,
        None if complement else f"intersection of dim {meet.dim}, dimensions {levi.dim} + {rad.dim} vs {n}",
    )

    broken = [j for j, m in enumerate(matrices) if not (levi.is_invariant_under(m) and rad.is_invariant_under(m))]
    report.add(
        "invariance",
        not broken,
        None if not broken else f"derivation(s) {broken} do not preserve the decomposition",
    )
    return report


def verify_certificate(g: LieAlgebra, cert: LeviCertificate, family: Optional[DerivationFamily] = None) -> Report:
    """Recompute every check of the certificate from scratch.

    ``family`` overrides the certificate's own family (verification against a grading given
    separately).
    """
    matrices = family.matrices if family is not None else cert.matrices
    return _verification_checks(g, cert.levi, cert.radical, matrices)


def _extension_facts(g: LieAlgebra, g1: LieAlgebra, adjoined: Sequence[int], levi1: Subspace) -> Tuple[Subspace, Dict[str, bool]]:
    n = g.dim
    inside = all(v[j] == 0 for v in levi1.vectors for j in adjoined)
    levi = Subspace.span(n, [v[:n] for v in levi1.vectors])
    embedded_g = Subspace.span(g1.dim, [unit_vector(g1.dim, j) for j in range(n)])
    meet = subspace_intersection(embedded_g, radical(g1))
    restricted = Subspace.span(n, [v[:n] for v in meet.vectors]) == radical(g)
    return levi, {"levi_inside_algebra": inside, "radical_restricts": restricted}


def invariant_levi(g: LieAlgebra, family: DerivationFamily, engine: Optional[EngineConfig] = None) -> LeviCertificate:
    """Levi subalgebra of g preserved by every derivation of the family, with its certificate.

    Args:
        g: The algebra.
        family: Commuting semisimple derivations of g; empty means no constraint.
        engine: Engine settings; the global configuration when omitted.

    Returns:
        LeviCertificate: Levi subalgebra, radical, trace of the case ladder and every check.

    Raises:
        AssertionFailed: A check of the returned certificate failed.
    """
    require_valid_family(g, family)
    n = g.dim
    trace: List[CaseStep] = []
    facts: Dict[str, bool] = {}
    if family.is_empty():
        levi = classical_levi(g)
    else:
        extension = semidirect_extend(g, family)
        g1 = extension.algebra
        trace.append(CaseStep(CaseLabel.EXTEND, g1.dim, 0, detail=f"adjoined {len(extension.adjoined)} derivation(s)"))
        a_basis = [unit_vector(g1.dim, j) for j in extension.adjoined]
        levi1, ladder_trace = inner_invariant_levi(g1, a_basis, engine)
        trace.extend(CaseStep(s.case_label, s.algebra_dim, s.depth + 1, s.ideal_used, s.generic_H, s.detail) for s in ladder_trace)
        levi, facts = _extension_facts(g, g1, extension.adjoined, levi1)
        if not facts["levi_inside_algebra"]:
            raise AssertionFailed("l1 = [l1, l1] lies in g")
        if not facts["radical_restricts"]:
            raise AssertionFailed("g ∩ r1 = r")

    report = _verification_checks(g, levi, radical(g), family.matrices)
    checks = {**report.as_dict(), **facts}
    if not report.ok:
        failed = ", ".join(c.name for c in report.failures())
        raise AssertionFailed("the invariant Levi subalgebra passes verification", f"verification failed: {failed}")
    logger.info(f"Levi subalgebra of dimension {levi.dim} found in a {n}-dimensional algebra ({len(family)} derivation(s))")
    return LeviCertificate(levi, radical(g), family, tuple(trace), checks)


def graded_levi(g: LieAlgebra, grading: Grading, engine: Optional[EngineConfig] = None) -> GradedLevi:
    """Invariant Levi decomposition for a grading, with the graded components of both parts."""
    family = grading_to_derivations(g, grading)
    cert = invariant_levi(g, family, engine)
    return GradedLevi(
        cert,
        tuple(restrict_grading(g, grading, cert.levi)),
        tuple(restrict_grading(g, grading, cert.radical)),
    )
