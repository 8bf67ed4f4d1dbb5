import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spdual.classify import (
    ALPHA_NEGATIVE,
    BELOW_EMPTY_FLOOR,
    DUPLICATE_RHO,
    FIRST_ENTRY_LOW,
    LENGTH_MISMATCH,
    NOT_INCREASING,
    OFF_LATTICE,
    ValidationError,
    cuspidal_support,
    enumerate_sp,
    inducing_segments,
    k_prime,
    require_valid,
    require_valid_tuple,
    tuple_support,
    validate_sp,
    validate_tuple,
)
from spdual.core import CuspidalLine, GroupFamily, Segment, SPRep, SPTuple

from oracles import naive_tuples, naive_valid
from strategies import valid_tuples

F = Fraction


def tup(alpha, *entries, rho="rho1"):
    return SPTuple(CuspidalLine(rho, F(alpha)), tuple(F(e) for e in entries))


def codes(report):
    return {v.code for v in report.violations}


class TestValidateTuple:
    def test_accepts_known_good(self):
        assert validate_tuple(tup(F(3, 2), F(1, 2), F(5, 2))).ok
        assert validate_tuple(tup(F(5, 2), F(-1, 2), F(3, 2), F(5, 2))).ok
        assert validate_tuple(tup(1, 1)).ok
        assert validate_tuple(tup(0)).ok

    def test_accepts_all_empty(self):
        assert validate_tuple(tup(F(5, 2), F(-1, 2), F(1, 2), F(3, 2))).ok

    def test_negative_alpha(self):
        assert codes(validate_tuple(tup(F(-1, 2), F(1, 2)))) == {ALPHA_NEGATIVE}

    def test_length_mismatch(self):
        assert codes(validate_tuple(tup(F(3, 2), F(1, 2)))) == {LENGTH_MISMATCH}
        assert codes(validate_tuple(tup(1))) == {LENGTH_MISMATCH}

    def test_not_increasing(self):
        assert codes(validate_tuple(tup(F(3, 2), F(5, 2), F(1, 2)))) == {NOT_INCREASING}
        assert codes(validate_tuple(tup(F(3, 2), F(1, 2), F(1, 2)))) == {NOT_INCREASING}

    def test_first_entry_low(self):
        report = validate_tuple(tup(F(3, 2), F(-3, 2), F(1, 2)))
        assert FIRST_ENTRY_LOW in codes(report)
        assert BELOW_EMPTY_FLOOR in codes(report)

    def test_off_lattice(self):
        assert codes(validate_tuple(tup(F(3, 2), 0, F(3, 2)))) == {OFF_LATTICE}

    def test_multiple_violations_all_reported(self):
        report = validate_tuple(tup(F(3, 2), F(5, 2), 1))
        assert codes(report) == {NOT_INCREASING, OFF_LATTICE}

    def test_where_names_the_line(self):
        report = validate_tuple(tup(F(3, 2), F(5, 2), F(1, 2), rho="rho7"))
        assert report.violations[0].where == "rho7"

    @given(valid_tuples())
    def test_generated_tuples_validate(self, t):
        assert validate_tuple(t).ok

    @given(valid_tuples())
    def test_agreement_with_direct_transcription(self, t):
        assert naive_valid(t.line.alpha, t.entries)

    @given(valid_tuples(), st.integers(0, 4), st.sampled_from([F(1, 7), F(-2)]))
    def test_corrupted_entry_is_caught(self, t, pos, shift):
        if not t.entries:
            return
        pos = pos % len(t.entries)
        entries = list(t.entries)
        entries[pos] += shift
        report = validate_tuple(SPTuple(t.line, tuple(entries)))
        assert report.ok == naive_valid(t.line.alpha, tuple(entries))


class TestValidateRep:
    def test_duplicate_labels(self):
        rep = SPRep(
            GroupFamily.METAPLECTIC,
            (tup(F(1, 2), F(1, 2)), tup(1, 1, rho="rho1")),
            "sigma_cusp",
        )
        assert codes(validate_sp(rep)) == {DUPLICATE_RHO}

    def test_collects_violations_across_lines(self):
        rep = SPRep(
            GroupFamily.METAPLECTIC,
            (tup(F(1, 2), F(3, 2)), tup(1, 0, rho="rho2"), tup(2, 2, 1, rho="rho3")),
            "sigma_cusp",
        )
        report = validate_sp(rep)
        assert not report.ok
        assert codes(report) == {NOT_INCREASING}
        assert {v.where for v in report.violations} == {"rho3"}

    def test_no_lines_is_valid(self):
        rep = SPRep(GroupFamily.METAPLECTIC, (), "sigma_cusp")
        assert validate_sp(rep).ok

    def test_require_valid_raises_with_report(self):
        with pytest.raises(ValidationError) as err:
            require_valid_tuple(tup(F(3, 2), F(5, 2), F(1, 2)))
        assert err.value.report.violations[0].code == NOT_INCREASING
        require_valid(SPRep(GroupFamily.GSPIN_ODD, (), "sigma_cusp"))


class TestDerivedData:
    def test_k_prime(self):
        assert k_prime(tup(F(5, 2), F(-1, 2), F(1, 2), F(3, 2))) is None
        assert k_prime(tup(F(5, 2), F(-1, 2), F(1, 2), F(7, 2))) == 3
        assert k_prime(tup(F(5, 2), F(1, 2), F(3, 2), F(5, 2))) == 1

    def test_inducing_segments_skip_empty(self):
        t = tup(F(5, 2), F(-1, 2), F(3, 2), F(5, 2))
        segs = inducing_segments(t)
        assert segs == (
            Segment("rho1", F(3, 2), F(3, 2)),
            Segment("rho1", F(5, 2), F(5, 2)),
        )

    def test_tuple_support(self):
        t = tup(F(3, 2), F(1, 2), F(5, 2))
        assert tuple_support(t) == Counter({F(1, 2): 1, F(3, 2): 1, F(5, 2): 1})

    def test_support_counts_shared_exponents(self):
        t = tup(F(5, 2), F(3, 2), F(5, 2), F(7, 2))
        support = tuple_support(t)
        assert support[F(3, 2)] == 2
        assert support[F(5, 2)] == 2
        assert support[F(7, 2)] == 1

    def test_cuspidal_support_lists_every_line(self):
        rep = SPRep(
            GroupFamily.METAPLECTIC,
            (tup(F(1, 2), F(-1, 2)), tup(1, 1, rho="rho2")),
            "sigma_cusp",
        )
        support = cuspidal_support(rep)
        assert support["rho1"] == Counter()
        assert support["rho2"] == Counter({F(1): 1})

    @given(valid_tuples())
    def test_support_size_matches_segment_lengths(self, t):
        segs = inducing_segments(t)
        assert sum(tuple_support(t).values()) == sum(len(s) for s in segs)


class TestEnumerate:
    def test_alpha_zero_gives_single_empty_tuple(self):
        line = CuspidalLine("rho1", F(0))
        assert enumerate_sp(line, F(10)) == [SPTuple(line, ())]
        assert enumerate_sp(line, F(-1)) == [SPTuple(line, ())]

    def test_known_count(self):
        line = CuspidalLine("rho1", F(3, 2))
        tuples = enumerate_sp(line, F(5, 2))
        assert len(tuples) == 6
        assert tuples[0].entries == (F(-1, 2), F(1, 2))
        assert tuples[-1].entries == (F(3, 2), F(5, 2))

    def test_lex_order_and_uniqueness(self):
        line = CuspidalLine("rho1", F(5, 2))
        tuples = [t.entries for t in enumerate_sp(line, F(7, 2))]
        assert tuples == sorted(tuples)
        assert len(set(tuples)) == len(tuples)

    def test_rejects_off_lattice_bound(self):
        with pytest.raises(ValueError):
            enumerate_sp(CuspidalLine("rho1", F(3, 2)), F(2))

    def test_rejects_bound_excluding_all_empty(self):
        with pytest.raises(ValueError):
            enumerate_sp(CuspidalLine("rho1", F(3, 2)), F(-3, 2))

    def test_rejects_negative_alpha(self):
        with pytest.raises(ValueError):
            enumerate_sp(CuspidalLine("rho1", F(-1, 2)), F(1, 2))

    @given(
        st.builds(lambda n, d: F(n, d), st.integers(0, 10), st.sampled_from((1, 2, 3))),
        st.integers(0, 4),
    )
    def test_matches_brute_force_filter(self, alpha, offset):
        line = CuspidalLine("rho1", alpha)
        bound = alpha - 1 + offset
        got = [t.entries for t in enumerate_sp(line, bound)]
        assert got == naive_tuples(alpha, bound)

    @given(
        st.builds(lambda n, d: F(n, d), st.integers(1, 10), st.sampled_from((1, 2, 3))),
        st.integers(0, 4),
    )
    def test_count_is_binomial(self, alpha, offset):
        line = CuspidalLine("rho1", alpha)
        k = line.k
        got = enumerate_sp(line, alpha - 1 + offset)
        assert len(got) == math.comb(k + offset, k)
