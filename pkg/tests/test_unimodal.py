import pytest
from hypothesis import given, strategies as st

from srdpoly.core import SignedSeq
from srdpoly.enumeration import SeqClass, bar_count, classify, collect
from srdpoly.recur import coeff_q
from srdpoly.unimodal import (check_inj_one_to_two, check_inj_zero_to_one, delta_P,
                              inj_one_to_two, inj_zero_to_one, is_unimodal, one_to_two_case,
                              verify_injections, verify_unimodality)

from conftest import seq


def test_is_unimodal_examples():
    v = is_unimodal([11, 64, 112, 64, 11])
    assert v.unimodal and v.mode_index == 2 and v.first_violation is None
    v = is_unimodal([1, 0, 1])
    assert not v.unimodal and v.first_violation == (1, 2) and v.mode_index is None
    v = is_unimodal([5])
    assert v.unimodal and v.mode_index == 0
    with pytest.raises(ValueError):
        is_unimodal([])


def _brute_unimodal(xs):
    return any(all(xs[i] <= xs[i + 1] for i in range(k)) and
               all(xs[i] >= xs[i + 1] for i in range(k, len(xs) - 1))
               for k in range(len(xs)))


@given(st.lists(st.integers(0, 4), min_size=1, max_size=7))
def test_is_unimodal_matches_definition(xs):
    v = is_unimodal(xs)
    assert v.unimodal == _brute_unimodal(xs)
    if v.unimodal:
        assert xs[v.mode_index] == max(xs) and xs.index(max(xs)) == v.mode_index


def test_delta_P_examples():
    assert delta_P(4, 2) == 48
    assert delta_P(4, 0) == 11
    assert delta_P(9, 4) == 30752450 - 19444106 >= 0


def test_rows_are_symmetric_and_unimodal():
    for n in range(1, 31):
        row = [coeff_q(n, m) for m in range(n + 1)]
        assert row == row[::-1]
        v = is_unimodal(row)
        assert v.unimodal and v.mode_index in (n // 2, (n + 1) // 2)
        assert all(delta_P(n, m) >= 0 for m in range(n // 2 + 1))


def test_inj_zero_to_one_examples():
    assert str(inj_zero_to_one(seq("2 1"))) == "2' 1"
    out = inj_zero_to_one(seq("4 1 3 2"))
    assert str(out) == "4' 1 3 2" and classify(out, SeqClass.SRD_CLASSICAL)
    with pytest.raises(ValueError):
        inj_zero_to_one(seq("1 2"))
    with pytest.raises(ValueError):
        inj_zero_to_one(seq("2' 1"))


def test_inj_zero_to_one_injective_n4():
    inputs = [SignedSeq.from_codes(c) for c in collect(4, SeqClass.RELATIVE_DERANGEMENT)]
    outputs = {inj_zero_to_one(s) for s in inputs}
    assert len(inputs) == len(outputs) == 11


@pytest.mark.parametrize("text, case, expected", [
    ("2' 1 4 3", "1", "2' 1 4' 3"),
    ("1 3' 4 2", "2b", "1' 3' 4 2"),
    ("4' 1 3 2", "3a", "4 1' 3' 2"),
    ("1 3' 2 4", "2a", "1 3' 2 4'"),
    ("1 3 4' 2", "3b", "1' 3 4' 2"),
])
def test_inj_one_to_two_cases(text, case, expected):
    s = seq(text)
    assert one_to_two_case(s) == case
    out = inj_one_to_two(s)
    assert str(out) == expected
    assert bar_count(out) == 2 and classify(out, SeqClass.SRD_CLASSICAL)


def test_inj_one_to_two_preconditions():
    with pytest.raises(ValueError):
        inj_one_to_two(seq("2' 1 3"))  # n < 4
    with pytest.raises(ValueError):
        inj_one_to_two(seq("2' 1 4' 3"))  # two bars
    with pytest.raises(ValueError):
        inj_one_to_two(seq("1 2 4' 3"))  # not an SRD


@pytest.mark.parametrize("n", range(1, 7))
def test_inj_zero_to_one_exhaustive(n):
    assert check_inj_zero_to_one(n) is None


@pytest.mark.parametrize("n", range(4, 7))
def test_inj_one_to_two_exhaustive(n):
    assert check_inj_one_to_two(n) is None


def test_verify_helpers():
    assert all(r.passed for r in verify_unimodality(30))
    assert all(r.passed for r in verify_injections(6))
