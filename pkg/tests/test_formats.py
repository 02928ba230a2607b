import json
from fractions import Fraction

import pytest

from levikit import catalog
from levikit.errors import FormatError, StaleCertificate
from levikit.formats import codec
from levikit.gradings import DerivationFamily, grading_to_derivations
from levikit.levi import invariant_levi, verify_certificate
from levikit.split import split_family


class TestRationals:
    def test_canonical_forms(self):
        assert codec.format_rational(Fraction(2, 4)) == "1/2"
        assert codec.format_rational(Fraction(-3)) == "-3"

    def test_non_canonical_input_is_noted(self):
        notes = []
        assert codec.parse_rational("2/4", "x", notes) == Fraction(1, 2)
        assert notes and "'1/2'" in notes[0]

    def test_integers_are_accepted_but_noted(self):
        notes = []
        assert codec.parse_rational(3, "x", notes) == 3
        assert len(notes) == 1

    @pytest.mark.parametrize("bad", [0.5, True, "1.5", "1/0", "a/b", None])
    def test_rejected(self, bad):
        with pytest.raises(FormatError):
            codec.parse_rational(bad, "x")


class TestAlgebraFiles:
    def test_round_trip_is_byte_identical(self, sl2):
        text = codec.dump_algebra(sl2.algebra)
        g = codec.parse_algebra(text)
        assert g == sl2.algebra
        assert codec.dump_algebra(g) == text

    def test_sorted_keys_and_string_rationals(self, sl2):
        data = json.loads(codec.dump_algebra(sl2.algebra))
        assert list(data) == sorted(data)
        assert data["brackets"][0] == {"i": 0, "j": 1, "terms": [{"c": "2", "k": 1}]}

    def test_normalizes_input(self):
        text = json.dumps({"dim": 2, "names": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "2/4"}]}]})
        notes = []
        g = codec.parse_algebra(text, "a.json", notes)
        assert '"c": "1/2"' in codec.dump_algebra(g)
        assert len(notes) == 1

    def test_parse_errors_have_context(self):
        with pytest.raises(FormatError, match="line 1 column"):
            codec.parse_algebra("{", "broken.json")
        with pytest.raises(FormatError, match="field dim"):
            codec.parse_algebra(json.dumps({"names": []}), "missing.json")
        with pytest.raises(FormatError, match=r"brackets\[0\]"):
            codec.parse_algebra(
                json.dumps({"dim": 2, "names": ["a", "b"], "brackets": [{"i": 1, "j": 0, "terms": []}]}),
                "order.json",
            )

    def test_float_coefficient_is_rejected(self):
        text = json.dumps({"dim": 2, "names": ["a", "b"], "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": 1.0}]}]})
        with pytest.raises(FormatError, match=r"field brackets\.0\.terms\.0\.c"):
            codec.parse_algebra(text, "float.json")

    def test_field_errors_point_at_the_source_line(self):
        data = {"brackets": [{"i": 0, "j": 1, "terms": [{"c": 1.0, "k": 1}]}], "dim": 2, "names": ["a", "b"]}
        with pytest.raises(FormatError, match=r"float\.json: line 8 column 16: field brackets\.0\.terms\.0\.c"):
            codec.parse_algebra(json.dumps(data, indent=2, sort_keys=True), "float.json")
        with pytest.raises(FormatError, match=r"line 5 column 5: field names\.1"):
            codec.parse_algebra(json.dumps({"dim": 2, "names": ["a", 3]}, indent=2, sort_keys=True), "names.json")
        with pytest.raises(FormatError, match="line 1 column 1: field dim"):
            codec.parse_algebra(json.dumps({"names": []}, indent=2), "missing.json")

    def test_duplicate_pairs(self):
        entry = {"i": 0, "j": 1, "terms": []}
        with pytest.raises(FormatError, match="listed twice"):
            codec.parse_algebra(json.dumps({"dim": 2, "names": ["a", "b"], "brackets": [entry, entry]}))

    def test_files(self, tmp_path, gl2):
        path = codec.write_algebra(tmp_path / "gl2.algebra.json", gl2.algebra)
        assert codec.read_algebra(path) == gl2.algebra

    def test_missing_file(self, tmp_path):
        with pytest.raises(FormatError, match="cannot read"):
            codec.read_algebra(tmp_path / "absent.json")


class TestGradingFiles:
    def test_adapted_grading_uses_degrees(self, sl2):
        data = json.loads(codec.dump_grading(sl2.gradings[0]))
        assert data == {"degrees": [[0], [2], [-2]], "rank": 1}

    def test_transported_grading_uses_components(self, skewed):
        text = codec.dump_grading(skewed.gradings[0])
        assert "components" in json.loads(text)
        parsed = codec.parse_grading(text, dim=skewed.algebra.dim)
        assert parsed == skewed.gradings[0]
        assert codec.dump_grading(parsed) == text

    def test_exactly_one_form(self):
        with pytest.raises(FormatError):
            codec.parse_grading(json.dumps({"rank": 1}))

    def test_degree_count(self):
        with pytest.raises(FormatError, match="degrees"):
            codec.parse_grading(json.dumps({"rank": 1, "degrees": [[0], [1]]}), dim=3)


class TestFamilyFiles:
    def test_round_trip(self, gl2):
        family = gl2.families[0]
        text = codec.dump_family(family)
        parsed = codec.parse_family(text, gl2.algebra)
        assert parsed == family
        assert codec.dump_family(parsed) == text

    def test_shape_is_checked(self, sl2):
        text = json.dumps({"matrices": [[["1", "0"], ["0", "1"]]]})
        with pytest.raises(FormatError, match="3x3"):
            codec.parse_family(text, sl2.algebra)


class TestCertificates:
    def test_round_trip_is_byte_identical(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        family = sl2_sd_v2.families[0]
        cert = invariant_levi(g, family)
        text = codec.dump_certificate(g, cert)
        parsed = codec.parse_certificate(text, g, family)
        assert codec.dump_certificate(g, parsed) == text
        assert parsed.levi == cert.levi
        assert parsed.trace == cert.trace
        assert verify_certificate(g, parsed).ok

    def test_deterministic(self, sl2_sd_h3):
        g = sl2_sd_h3.algebra
        family = sl2_sd_h3.families[0]
        first = codec.dump_certificate(g, invariant_levi(g, family))
        second = codec.dump_certificate(g, invariant_levi(g, family))
        assert first == second
        assert "time" not in json.loads(first)

    def test_does_not_embed_the_algebra(self, sl2):
        cert = invariant_levi(sl2.algebra, DerivationFamily.empty(sl2.algebra))
        data = json.loads(codec.dump_certificate(sl2.algebra, cert))
        assert "names" not in data
        assert data["algebra_sha256"] == codec.content_sha256(codec.dump_algebra(sl2.algebra))

    def test_stale_algebra(self, sl2, gl2):
        cert = invariant_levi(sl2.algebra, DerivationFamily.empty(sl2.algebra))
        text = codec.dump_certificate(sl2.algebra, cert)
        with pytest.raises(StaleCertificate, match="different algebra"):
            codec.parse_certificate(text, gl2.algebra)

    def test_stale_family(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        cert = invariant_levi(g, sl2_sd_v2.families[0])
        text = codec.dump_certificate(g, cert)
        with pytest.raises(StaleCertificate, match="derivation family"):
            codec.parse_certificate(text, g, sl2_sd_v2.families[1])

    def test_files_with_grading_family(self, tmp_path, sl2):
        g = sl2.algebra
        family = grading_to_derivations(g, sl2.gradings[0])
        path = codec.write_certificate(tmp_path / "sl2.cert.json", g, invariant_levi(g, family))
        parsed = codec.read_certificate(path, g, grading_to_derivations(g, sl2.gradings[0]))
        assert parsed.levi.is_full()


class TestSplitFiles:
    def test_round_trip(self, sl2_sd_v2):
        g = sl2_sd_v2.algebra
        cert = invariant_levi(g, sl2_sd_v2.families[0])
        result = split_family(g, cert)
        text = codec.dump_split(result)
        parsed = codec.parse_split(text, g.dim)
        assert parsed == result
        assert codec.dump_split(parsed) == text


def test_catalog_entries_round_trip():
    for name in catalog.get_available_entries():
        entry = catalog.get_entry(name)
        text = codec.dump_algebra(entry.algebra)
        assert codec.dump_algebra(codec.parse_algebra(text)) == text
