"""
sl2 acting on a nilpotent radical: the standard module, its Heisenberg extension, and a copy of
the standard module whose grading is moved off the coordinate Levi subalgebra.
"""

from levikit.algebra import LieAlgebra, automorphism_exp
from levikit.catalog.classical import SL2_TABLE
from levikit.catalog.entry import CatalogEntry
from levikit.gradings import DerivationFamily, Grading, transport_family, transport_grading
from levikit.linalg import Matrix, Subspace

# [h, v+] = v+, [h, v-] = -v-, [e, v-] = v+, [f, v+] = v-
STANDARD_MODULE_TABLE = {
    (0, 3): (0, 0, 0, 1, 0),
    (0, 4): (0, 0, 0, 0, -1),
    (1, 4): (0, 0, 0, 1, 0),
    (2, 3): (0, 0, 0, 0, 1),
}

SL2_SD_V2_DEGREES = [(0, 0), (2, 0), (-2, 0), (1, 1), (-1, 1)]


def _span(g: LieAlgebra, *names: str) -> Subspace:
    return Subspace.span(g.dim, [g.unit(name) for name in names])


def _sl2_sd_v2_algebra() -> LieAlgebra:
    return LieAlgebra.from_table(("h", "e", "f", "v+", "v-"), {**SL2_TABLE, **STANDARD_MODULE_TABLE})


def _scale(g: LieAlgebra) -> Matrix:
    """0 on sl2, identity on the radical."""
    return Matrix.diagonal([0, 0, 0] + [1] * (g.dim - 3))


def sl2_sd_v2() -> CatalogEntry:
    g = _sl2_sd_v2_algebra()
    ad_h = g.ad_matrix(g.unit("h"))
    return CatalogEntry(
        name="sl2_sd_v2",
        algebra=g,
        gradings=(Grading.from_degrees(2, SL2_SD_V2_DEGREES),),
        families=(
            DerivationFamily(g, (ad_h, _scale(g)), ("ad_h", "scale")),
            DerivationFamily(g, (_scale(g),), ("scale",)),
        ),
        expected=(_span(g, "h", "e", "f"), _span(g, "v+", "v-")),
        description="sl(2) acting on its standard module Q^2",
        notes="Case 2b; the scale derivation is outer",
    )


def sl2_sd_v2_skewed() -> CatalogEntry:
    """sl2_sd_v2 with grading and families moved by T = id + ad(v+).

    The structure constants are unchanged; the transported grading is no longer adapted to the
    coordinate Levi subalgebra span{h, e, f}, and the invariant one is T(sl2) = span{h - v+, e, f - v-}.
    """
    g = _sl2_sd_v2_algebra()
    base = sl2_sd_v2()
    v_plus = g.unit("v+")
    transform = automorphism_exp(g, v_plus)
    inverse = automorphism_exp(g, tuple(-c for c in v_plus))
    levi = base.expected_levi.image_under(transform)
    return CatalogEntry(
        name="sl2_sd_v2_skewed",
        algebra=g,
        gradings=tuple(transport_grading(gr, transform) for gr in base.gradings),
        families=tuple(transport_family(fam, transform, inverse, g) for fam in base.families),
        expected=(levi, base.expected_radical),
        description="sl(2) + Q^2 with the grading transported by id + ad(v+)",
        notes="the coordinate Levi subalgebra is not invariant",
    )


def sl2_sd_h3() -> CatalogEntry:
    table = {**SL2_TABLE, **{k: v + (0,) for k, v in STANDARD_MODULE_TABLE.items()}, (3, 4): (0, 0, 0, 0, 0, 1)}
    g = LieAlgebra.from_table(("h", "e", "f", "v+", "v-", "z"), table)
    weight = Matrix.diagonal([0, 0, 0, 1, 1, 2])
    ad_h = g.ad_matrix(g.unit("h"))
    return CatalogEntry(
        name="sl2_sd_h3",
        algebra=g,
        gradings=(
            Grading.from_degrees(2, SL2_SD_V2_DEGREES + [(0, 2)]),
            Grading.from_degrees(1, [(0,), (2,), (-2,), (1,), (-1,), (0,)]),
        ),
        families=(
            DerivationFamily(g, (ad_h, weight), ("ad_h", "weight")),
            DerivationFamily(g, (weight,), ("weight",)),
            DerivationFamily(g, (ad_h,), ("ad_h",)),
        ),
        expected=(_span(g, "h", "e", "f"), _span(g, "v+", "v-", "z")),
        description="sl(2) acting on the Heisenberg algebra [v+, v-] = z",
        notes="Case 1 with [r, r] = span{z}; the weight derivation is outer",
    )
