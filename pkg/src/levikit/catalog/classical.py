"""
Classical small algebras: abelian, Heisenberg, sl2, so3, gl2 and upper triangular matrices.
"""

from itertools import combinations

from levikit.algebra import LieAlgebra
from levikit.catalog.entry import CatalogEntry
from levikit.gradings import DerivationFamily, Grading
from levikit.linalg import Matrix, Subspace

SL2_TABLE = {
    (0, 1): (0, 2, 0),
    (0, 2): (0, 0, -2),
    (1, 2): (1, 0, 0),
}


def _span(g: LieAlgebra, *names: str) -> Subspace:
    return Subspace.span(g.dim, [g.unit(name) for name in names])


def abelian(n: int) -> CatalogEntry:
    g = LieAlgebra(n, tuple(f"x{k}" for k in range(n)))
    return CatalogEntry(
        name=f"abelian{n}",
        algebra=g,
        gradings=(Grading.from_degrees(1, [(k + 1,) for k in range(n)]),),
        families=(DerivationFamily(g, (Matrix.diagonal([k % 2 for k in range(n)]),), ("parity",)),),
        expected=(Subspace.zero(n), Subspace.full(n)),
        description=f"{n}-dimensional abelian algebra",
        notes="solvable; any diagonal matrix is a derivation",
    )


def heisenberg3() -> CatalogEntry:
    g = LieAlgebra.from_table(("x", "y", "z"), {(0, 1): (0, 0, 1)})
    return CatalogEntry(
        name="heisenberg3",
        algebra=g,
        gradings=(Grading.from_degrees(1, [(1,), (1,), (2,)]),),
        families=(DerivationFamily(g, (Matrix.diagonal([1, 1, 2]),), ("weight",)),),
        expected=(Subspace.zero(3), Subspace.full(3)),
        description="3-dimensional Heisenberg algebra [x, y] = z",
        notes="nilpotent",
    )


def sl2() -> CatalogEntry:
    g = LieAlgebra.from_table(("h", "e", "f"), SL2_TABLE)
    return CatalogEntry(
        name="sl2",
        algebra=g,
        gradings=(Grading.from_degrees(1, [(0,), (2,), (-2,)]),),
        families=(DerivationFamily.inner(g, [g.unit("h")], ("ad_h",)),),
        expected=(Subspace.full(3), Subspace.zero(3)),
        description="sl(2) in the basis h, e, f",
        notes="simple",
    )


def so3() -> CatalogEntry:
    g = LieAlgebra.from_table(
        ("x", "y", "z"),
        {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, -1, 0)},
    )
    return CatalogEntry(
        name="so3",
        algebra=g,
        gradings=(Grading.trivial(3),),
        expected=(Subspace.full(3), Subspace.zero(3)),
        description="so(3), the compact form of sl(2) over Q",
        notes="simple; ad(x) has irrational spectrum so only the trivial grading is offered",
    )


def gl2() -> CatalogEntry:
    g = LieAlgebra.from_table(("h", "e", "f", "I"), SL2_TABLE)
    return CatalogEntry(
        name="gl2",
        algebra=g,
        gradings=(Grading.from_degrees(1, [(0,), (2,), (-2,), (0,)]),),
        families=(
            DerivationFamily(g, (g.ad_matrix(g.unit("h")), Matrix.diagonal([0, 0, 0, 1])), ("ad_h", "center_scale")),
        ),
        expected=(_span(g, "h", "e", "f"), _span(g, "I")),
        description="gl(2) = sl(2) + center",
        notes="radical is the center; Levi subalgebra is [g, g]",
    )


def _matrix_unit_name(i: int, j: int, n: int) -> str:
    return f"E{i}{j}" if n < 10 else f"E{i}_{j}"


def upper_triangular(n: int) -> CatalogEntry:
    """Upper triangular n x n matrices, diagonal units first, then E_ij (i < j) lexicographically."""
    units = [(i, i) for i in range(1, n + 1)] + [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    index = {u: k for k, u in enumerate(units)}
    dim = len(units)
    table = {}
    for a, b in combinations(range(dim), 2):
        (i, j), (k, l) = units[a], units[b]
        v = [0] * dim
        # [E_ij, E_kl] = d_jk E_il - d_li E_kj
        if j == k:
            v[index[(i, l)]] += 1
        if l == i:
            v[index[(k, j)]] -= 1
        if any(v):
            table[(a, b)] = tuple(v)
    g = LieAlgebra.from_table([_matrix_unit_name(i, j, n) for i, j in units], table)
    gradings = ()
    if n > 1:
        degrees = [tuple(1 if i <= k < j else 0 for k in range(1, n)) for i, j in units]
        gradings = (Grading.from_degrees(n - 1, degrees),)
    return CatalogEntry(
        name=f"upper_triangular{n}",
        algebra=g,
        gradings=gradings,
        expected=(Subspace.zero(dim), Subspace.full(dim)),
        description=f"upper triangular {n}x{n} matrices",
        notes="solvable; graded by the simple roots",
    )
