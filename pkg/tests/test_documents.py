from fractions import Fraction

import pytest
from hypothesis import given, settings

from spdual.core import CuspidalLine, GroupFamily, SPRep, SPTuple
from spdual.documents import (
    DocumentError,
    document_to_rep,
    langlands_to_document,
    rep_to_document,
)
from spdual.dual import dual

from strategies import valid_reps

F = Fraction


def sample_doc():
    return {
        "group": "metaplectic",
        "cuspidal_support": "sigma_cusp",
        "lines": [{"rho": "rho1", "alpha": "3/2", "tuple": ["1/2", "5/2"]}],
    }


class TestParsing:
    def test_parses_sample(self):
        rep = document_to_rep(sample_doc())
        assert rep.family is GroupFamily.METAPLECTIC
        assert rep.cuspidal_support_label == "sigma_cusp"
        assert rep.central_character_label is None
        (line,) = rep.lines
        assert line.line == CuspidalLine("rho1", F(3, 2))
        assert line.entries == (F(1, 2), F(5, 2))

    def test_group_aliases_accepted(self):
        doc = sample_doc()
        doc["group"] = "mp"
        assert document_to_rep(doc).family is GroupFamily.METAPLECTIC

    def test_missing_lines_means_cuspidal(self):
        rep = document_to_rep({"group": "gspin_odd", "cuspidal_support": "sigma_cusp"})
        assert rep.lines == ()
        assert rep.is_cuspidal()

    def test_central_character_on_gspin(self):
        doc = {
            "group": "gspin_odd",
            "cuspidal_support": "sigma_cusp",
            "central_character": "omega",
            "lines": [],
        }
        assert document_to_rep(doc).central_character_label == "omega"

    def test_inadmissible_tuple_still_parses(self):
        doc = sample_doc()
        doc["lines"][0]["tuple"] = ["5/2", "1/2"]
        rep = document_to_rep(doc)
        assert rep.lines[0].entries == (F(5, 2), F(1, 2))


class TestRejection:
    @pytest.mark.parametrize(
        "mangle",
        [
            lambda d: d.pop("group"),
            lambda d: d.update(group="so_odd"),
            lambda d: d.pop("cuspidal_support"),
            lambda d: d.update(cuspidal_support=""),
            lambda d: d.update(cuspidal_support=7),
            lambda d: d.update(central_character="omega"),
            lambda d: d.update(lines="nope"),
            lambda d: d.update(extra=1),
            lambda d: d["lines"].append("nope"),
            lambda d: d["lines"][0].pop("rho"),
            lambda d: d["lines"][0].update(alpha="1.5"),
            lambda d: d["lines"][0].update(alpha=1.5),
            lambda d: d["lines"][0].update(tuple="1/2"),
            lambda d: d["lines"][0].update(tuple=["1/2", "x"]),
            lambda d: d["lines"][0].update(tuple=[0.5]),
            lambda d: d["lines"][0].update(surprise=1),
        ],
    )
    def test_malformed_documents(self, mangle):
        doc = sample_doc()
        mangle(doc)
        with pytest.raises(DocumentError):
            document_to_rep(doc)

    def test_non_dict_rejected(self):
        with pytest.raises(DocumentError):
            document_to_rep([1, 2])


class TestSerialization:
    def test_rationals_travel_as_strings(self):
        rep = document_to_rep(sample_doc())
        assert rep_to_document(rep) == sample_doc()

    def test_central_character_omitted_when_absent(self):
        rep = document_to_rep(sample_doc())
        assert "central_character" not in rep_to_document(rep)

    @given(valid_reps())
    @settings(deadline=None, max_examples=60)
    def test_round_trip(self, rep):
        assert document_to_rep(rep_to_document(rep)) == rep

    def test_langlands_document(self):
        rep = SPRep(
            GroupFamily.GSPIN_ODD,
            (SPTuple(CuspidalLine("rho1", F(3, 2)), (F(1, 2), F(5, 2))),),
            "sigma_cusp",
            "omega",
        )
        doc = langlands_to_document(dual(rep))
        assert doc == {
            "group": "gspin_odd",
            "cuspidal_support": "sigma_cusp",
            "central_character": "omega",
            "segments": [
                {"rho": "rho1", "lo": "-5/2", "hi": "-5/2"},
                {"rho": "rho1", "lo": "-3/2", "hi": "-1/2"},
            ],
        }
