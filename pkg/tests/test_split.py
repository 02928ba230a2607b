import pytest

from levikit import catalog
from levikit.algebra import radical
from levikit.errors import NotInvariant
from levikit.gradings import DerivationFamily
from levikit.levi import LeviCertificate, invariant_levi
from levikit.linalg import Matrix, Subspace
from levikit.split import factor_families, split_derivation, split_family


def span(g, *names):
    return Subspace.span(g.dim, [g.unit(name) for name in names])


class TestSplitDerivation:
    def test_inner_derivation_has_zero_residual(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        levi = span(g, "h", "e", "f")
        H_l, residual = split_derivation(g, levi, g.ad_matrix(g.unit("h")))
        assert H_l == g.unit("h")
        assert residual.is_zero()

    def test_outer_derivation_is_all_residual(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        scale = Matrix.diagonal([0, 0, 0, 1, 1])
        H_l, residual = split_derivation(g, span(g, "h", "e", "f"), scale)
        assert H_l == g.element()
        assert residual == scale

    def test_mixed_grading_derivation(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        # degree derivation of the second coordinate plus ad(h)
        D = g.ad_matrix(g.unit("h")) + Matrix.diagonal([0, 0, 0, 1, 1])
        H_l, residual = split_derivation(g, span(g, "h", "e", "f"), D)
        assert H_l == g.unit("h")
        assert residual == Matrix.diagonal([0, 0, 0, 1, 1])

    def test_derivation_must_preserve_levi(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        skewed = Subspace.span(g.dim, [g.element(h=1, **{"v+": -1}), g.unit("e"), g.element(f=1, **{"v-": -1})])
        with pytest.raises(NotInvariant):
            split_derivation(g, skewed, Matrix.diagonal([0, 0, 0, 1, 1]))

    def test_zero_levi(self, heisenberg):
        g = heisenberg.algebra
        D = Matrix.diagonal([1, 1, 2])
        H_l, residual = split_derivation(g, Subspace.zero(3), D)
        assert H_l == g.element()
        assert residual == D


class TestSplitFamily:
    @pytest.mark.parametrize("name", catalog.get_available_entries())
    def test_reconstructs_every_catalog_family(self, name):
        entry = catalog.get_entry(name)
        g = entry.algebra
        for family in entry.all_families():
            cert = invariant_levi(g, family)
            result = split_family(g, cert)
            assert len(result) == len(family)
            for split, D in zip(result.splits, family.matrices):
                assert g.ad_matrix(split.H_l) + split.residual == D
                assert cert.levi.contains(split.H_l)
            assert result.inner_span.is_subspace_of(cert.levi)

    def test_commutator_families_vanish(self, sl2_sd_h3):
        g = sl2_sd_h3.algebra
        cert = invariant_levi(g, sl2_sd_h3.families[0])
        result = split_family(g, cert)
        inner = [g.ad_matrix(H) for H in result.inner_parts]
        for a in inner:
            for b in inner:
                assert a.commutes_with(b)
            for res in result.residuals:
                assert a.commutes_with(res)
        for x in result.residuals:
            for y in result.residuals:
                assert x.commutes_with(y)

    def test_empty_family(self, sl2):
        g = sl2.algebra
        cert = invariant_levi(g, DerivationFamily.empty(g))
        result = split_family(g, cert)
        assert len(result) == 0
        assert result.inner_span.is_zero()

    def test_family_argument_overrides_certificate(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        cert = LeviCertificate(span(g, "h", "e", "f"), radical(g))
        family = DerivationFamily.inner(g, [g.unit("h")], ("ad_h",))
        result = split_family(g, cert, family)
        assert result.inner_parts == (g.unit("h"),)
        assert result.splits[0].label == "ad_h"


class TestFactorFamilies:
    def test_gradings_of_both_factors(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        family = sl2_sd_v2.families[0]
        cert = invariant_levi(g, family)
        factored = factor_families(g, cert, split_family(g, cert))
        assert factored.levi_algebra.dim == 3
        assert factored.radical_algebra.dim == 2
        assert factored.levi_family.labels == ("ad_h", "scale")
        assert factored.levi_grading.degrees == ((-2, 0), (0, 0), (2, 0))
        assert factored.radical_grading.degrees == ((0, 1),)

    def test_no_family(self, sl2):
        g = sl2.algebra
        cert = invariant_levi(g, DerivationFamily.empty(g))
        factored = factor_families(g, cert, split_family(g, cert))
        assert factored.levi_grading is None
        assert factored.radical_algebra.dim == 0
