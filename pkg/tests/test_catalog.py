import pytest

from levikit import catalog
from levikit.algebra import automorphism_exp, inner_representative, is_automorphism, radical, validate
from levikit.errors import DimensionMismatch, UnknownName
from levikit.formats import codec
from levikit.gradings import validate_family, validate_grading
from levikit.levi import is_levi_subalgebra


class TestRegistry:
    def test_required_entries(self):
        names = catalog.get_available_entries()
        assert len(names) >= 9
        for required in ("heisenberg3", "sl2", "so3", "gl2", "sl2_sd_v2", "sl2_sd_h3", "upper_triangular3", "sl2_sd_v2_skewed"):
            assert required in names

    def test_every_entry_has_a_description(self):
        for name in catalog.get_available_entries():
            assert catalog.describe(name)

    def test_sized_builders(self):
        assert catalog.get_entry("abelian5").algebra.dim == 5
        assert catalog.get_entry("upper_triangular4").algebra.dim == 10
        assert catalog.get_entry("upper_triangular4").gradings[0].rank == 3

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            catalog.get_entry("sl3")
        with pytest.raises(UnknownName):
            catalog.get_entry("abelian0")

    def test_get_entries(self):
        assert [e.name for e in catalog.get_entries(["sl2", "gl2"])] == ["sl2", "gl2"]


class TestEntries:
    @pytest.mark.parametrize("name", catalog.get_available_entries())
    def test_entry_is_consistent(self, name):
        entry = catalog.get_entry(name)
        g = entry.algebra
        assert validate(g).ok
        for grading in entry.gradings:
            assert validate_grading(g, grading).ok
        for family in entry.families:
            assert validate_family(g, family).ok
        assert radical(g) == entry.expected_radical
        assert is_levi_subalgebra(g, entry.expected_levi)

    def test_skewed_entry_shares_structure_constants(self, sl2_sd_v2, skewed):
        assert skewed.algebra == sl2_sd_v2.algebra
        assert skewed.expected_levi != sl2_sd_v2.expected_levi

    def test_upper_triangular_bracket(self):
        g = catalog.get_entry("upper_triangular3").algebra
        assert g.bracket(g.unit("E12"), g.unit("E23")) == g.unit("E13")
        assert g.bracket(g.unit("E11"), g.unit("E12")) == g.unit("E12")
        assert g.bracket(g.unit("E22"), g.unit("E12")) == g.element(E12=-1)


class TestRandomInstances:
    def test_deterministic(self):
        a = catalog.random_instance(11, 12)
        b = catalog.random_instance(11, 12)
        assert a == b
        assert codec.dump_algebra(a.algebra) == codec.dump_algebra(b.algebra)
        assert codec.dump_grading(a.grading) == codec.dump_grading(b.grading)
        assert codec.dump_family(a.family) == codec.dump_family(b.family)

    @pytest.mark.parametrize("seed", range(10))
    def test_instance_is_valid(self, seed):
        instance = catalog.random_instance(seed, 12)
        g = instance.algebra
        assert 3 <= g.dim <= 12
        assert validate(g).ok
        assert validate_grading(g, instance.grading).ok
        assert validate_family(g, instance.family).ok
        assert radical(g) == instance.radical
        assert is_levi_subalgebra(g, instance.expected_levi)

    def test_expected_levi_is_invariant(self):
        instance = catalog.random_instance(3, 12)
        for m in instance.family.matrices:
            assert instance.expected_levi.is_invariant_under(m)

    def test_small_budget(self):
        instance = catalog.random_instance(0, 3)
        assert instance.algebra.dim == 3
        with pytest.raises(DimensionMismatch):
            catalog.random_instance(0, 2)

    def test_transport_is_an_automorphism(self):
        instance = next(i for i in (catalog.random_instance(s, 10) for s in range(50)) if not i.radical.is_zero())
        g = instance.algebra
        X = instance.radical.vectors[0]
        assert is_automorphism(g, automorphism_exp(g, X))

    def test_dimensions_vary_below_the_cap(self):
        dims = [catalog.random_instance(seed, 12).algebra.dim for seed in range(30)]
        assert all(3 <= d <= 12 for d in dims)
        assert len(set(dims)) > 1
        assert min(dims) < 12

    @pytest.mark.parametrize("seed", range(5))
    def test_inner_family_is_inner(self, seed):
        instance = catalog.random_instance(seed, 12, inner=True)
        g = instance.algebra
        assert instance.inner
        assert all(label.startswith("weight_h") for label in instance.family.labels)
        assert instance.grading.rank == len(instance.family)
        for m in instance.family.matrices:
            H = inner_representative(g, m)
            assert H is not None
            assert g.ad_matrix(H) == m

    def test_inner_flag_keeps_the_algebra(self):
        outer = catalog.random_instance(7, 12, inner=False)
        inner = catalog.random_instance(7, 12, inner=True)
        assert outer.algebra == inner.algebra
        assert len(outer.family) == len(inner.family) + 1
        assert outer.family.labels[-1] == "level"
