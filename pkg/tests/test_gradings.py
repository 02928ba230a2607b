import random

import pytest

from levikit import catalog
from levikit.algebra import automorphism_exp
from levikit.errors import (
    DimensionMismatch,
    IrrationalSpectrum,
    NonIntegerDegree,
    NotADerivation,
    NotAGrading,
    NotCommuting,
    NotGraded,
)
from levikit.gradings import (
    DerivationFamily,
    Grading,
    derivations_to_grading,
    grading_to_derivations,
    require_valid_family,
    restrict_grading,
    transport_family,
    transport_grading,
    validate_family,
    validate_grading,
)
from levikit.linalg import Matrix, Subspace


def span(g, *names):
    return Subspace.span(g.dim, [g.unit(name) for name in names])


class TestGrading:
    def test_components_are_sorted(self):
        grading = Grading.from_degrees(1, [(2,), (0,), (-2,)])
        assert grading.degrees == ((-2,), (0,), (2,))
        assert grading.basis_degrees() == [(2,), (0,), (-2,)]

    def test_rank_is_checked(self):
        with pytest.raises(NotAGrading):
            Grading.from_degrees(2, [(1,), (0,)])

    def test_component_lookup(self, sl2):
        grading = sl2.gradings[0]
        assert grading.component((2,)) == span(sl2.algebra, "e")
        assert grading.component((4,)) is None

    def test_validate(self, sl2):
        report = validate_grading(sl2.algebra, sl2.gradings[0])
        assert report.ok
        assert [c.name for c in report.checks] == ["direct_sum", "bracket_compatible"]

    def test_bracket_incompatible_grading(self, sl2):
        bad = Grading.from_degrees(1, [(0,), (1,), (1,)])
        with pytest.raises(NotAGrading) as info:
            validate_grading(sl2.algebra, bad)
        assert info.value.witness == ((1,), (1,))

    def test_components_must_span(self, sl2):
        g = sl2.algebra
        partial = Grading(1, (((0,), span(g, "h")), ((2,), span(g, "e"))))
        with pytest.raises(NotAGrading):
            validate_grading(g, partial)

    def test_skewed_grading_is_not_adapted(self, skewed):
        grading = skewed.gradings[0]
        assert validate_grading(skewed.algebra, grading).ok
        assert grading.basis_degrees() is None


class TestGradingDerivations:
    def test_sl2(self, sl2):
        family = grading_to_derivations(sl2.algebra, sl2.gradings[0])
        assert family.labels == ("deg0",)
        assert family.matrices[0] == Matrix.diagonal([0, 2, -2])
        assert family.matrices[0] == sl2.algebra.ad_matrix(sl2.algebra.unit("h"))

    @pytest.mark.parametrize("name", catalog.get_available_entries())
    def test_round_trip_on_catalog(self, name):
        entry = catalog.get_entry(name)
        for grading in entry.gradings:
            assert derivations_to_grading(entry.algebra, grading_to_derivations(entry.algebra, grading)) == grading

    def test_round_trip_on_random_gradings(self, run_config):
        rng = random.Random(7)
        g = catalog.get_entry("abelian4").algebra
        for _ in range(run_config.suite.grading_round_trips):
            rank = rng.randint(1, 3)
            degrees = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(g.dim)]
            grading = Grading.from_degrees(rank, degrees)
            family = grading_to_derivations(g, grading)
            assert derivations_to_grading(g, family) == grading

    def test_non_integer_weights(self, heisenberg):
        g = heisenberg.algebra
        family = DerivationFamily(g, (Matrix.diagonal(["1/2", "1/2", 1]),))
        with pytest.raises(NonIntegerDegree):
            derivations_to_grading(g, family)


class TestFamilyValidation:
    def test_valid_family(self, gl2):
        report = validate_family(gl2.algebra, gl2.families[0])
        assert report.ok
        assert set(report.as_dict()) == {"derivation", "commuting", "semisimple"}

    def test_every_failure_is_listed(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        not_derivation = Matrix.identity(g.dim)
        nilpotent = g.ad_matrix(g.unit("e"))
        report = validate_family(g, DerivationFamily(g, (not_derivation, nilpotent), ("id", "ad_e")))
        failed = {c.name for c in report.failures()}
        assert "derivation" in failed
        assert "semisimple" in failed

    def test_require_raises_the_first_failure(self, sl2):
        g = sl2.algebra
        with pytest.raises(NotADerivation):
            require_valid_family(g, DerivationFamily(g, (Matrix.identity(3),)))
        ad_h, ad_e = g.ad_matrix(g.unit("h")), g.ad_matrix(g.unit("e"))
        with pytest.raises(NotCommuting):
            require_valid_family(g, DerivationFamily(g, (ad_h, ad_e)))

    def test_irrational_spectrum(self):
        g = catalog.get_entry("abelian2").algebra
        rotation = Matrix([[0, -1], [1, 0]])
        with pytest.raises(IrrationalSpectrum):
            require_valid_family(g, DerivationFamily(g, (rotation,), ("rot",)))

    def test_shape_mismatch(self, sl2):
        with pytest.raises(DimensionMismatch):
            DerivationFamily(sl2.algebra, (Matrix.identity(2),))


class TestRestrictAndTransport:
    def test_restrict_graded_subspace(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        pieces = restrict_grading(g, sl2_sd_v2.gradings[0], span(g, "v+", "v-"))
        assert [d for d, _ in pieces] == [(-1, 1), (1, 1)]

    def test_restrict_reports_deficit(self, sl2):
        g = sl2.algebra
        with pytest.raises(NotGraded) as info:
            restrict_grading(g, sl2.gradings[0], Subspace.span(3, [[0, 1, 1]]))
        assert info.value.deficit == 1

    def test_transport_commutes_with_derivations(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        v = g.unit("v+")
        T = automorphism_exp(g, v)
        T_inv = automorphism_exp(g, tuple(-c for c in v))
        grading = sl2_sd_v2.gradings[0]
        moved = grading_to_derivations(g, transport_grading(grading, T))
        expected = transport_family(grading_to_derivations(g, grading), T, T_inv)
        assert moved.matrices == expected.matrices
