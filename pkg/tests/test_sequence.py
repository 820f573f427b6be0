import numpy as np
import pytest
from hypothesis import given, strategies as st

from graphicseq import (
    DegreeSequence,
    InvalidDegree,
    NotSorted,
    from_unsorted,
    is_graphic,
    is_potentially_graphic,
)
from graphicseq.sequence import format_sequence, parse_sequence

from conftest import seq
from oracles import erdos_gallai_naive, graphic_sequences, nonincreasing_sequences


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([1, 4, 1, 4], [4, 4, 1, 1]),
        ([], []),
        ([0, 0, 2, 1, 1], [2, 1, 1, 0, 0]),
    ],
)
def test_from_unsorted(raw, expected):
    a = from_unsorted(raw)
    assert a.tolist() == expected
    assert a.n == len(expected)
    assert a.s == sum(expected)


def test_empty_sequence_fields():
    a = from_unsorted([])
    assert (a.n, a.s) == (0, 0)
    assert a.prefix.tolist() == [0]


def test_negative_entry_rejected():
    with pytest.raises(InvalidDegree):
        from_unsorted([3, -1])
    with pytest.raises(InvalidDegree):
        DegreeSequence([2, -1])


def test_constructor_requires_nonincreasing():
    with pytest.raises(NotSorted):
        DegreeSequence([1, 2])


def test_immutable():
    a = seq(3, 2, 1)
    with pytest.raises(ValueError):
        a.values[0] = 9
    with pytest.raises(ValueError):
        a.prefix[0] = 9


def test_zeros_are_part_of_identity():
    assert seq(1, 1) != seq(1, 1, 0)
    assert seq(1, 1).padded(3) == seq(1, 1, 0)


@given(st.lists(st.integers(0, 50), max_size=40))
def test_from_unsorted_properties(raw):
    a = from_unsorted(raw)
    assert a.tolist() == sorted(raw, reverse=True)
    assert a.s == sum(raw)
    p = a.prefix
    assert p[-1] == a.s
    assert np.all(np.diff(p) >= 0)
    assert np.all(np.diff(p, 2) <= 0)
    # idempotent on sorted input
    assert from_unsorted(a.values) == a


@pytest.mark.parametrize(
    "values, expected",
    [((3, 3, 3, 1), True), ((1, 1, 1), False), ((5, 1), False)],
)
def test_is_potentially_graphic(values, expected):
    assert is_potentially_graphic(seq(*values)) is expected


@pytest.mark.parametrize(
    "values, expected",
    [((2, 2, 2, 2), True), ((4, 4, 1, 1), False), ((3, 3, 3, 1), False), ((), True), ((0, 0), True)],
)
def test_is_graphic_examples(values, expected):
    assert is_graphic(seq(*values)) is expected


def test_333_1_by_enumeration():
    # every graph on 4 labeled vertices; none has degrees (3,3,3,1)
    assert (3, 3, 3, 1) not in graphic_sequences(4)


@pytest.mark.parametrize("n", range(0, 8))
def test_is_graphic_matches_enumeration(n):
    realizable = graphic_sequences(n)
    for values in nonincreasing_sequences(n, n):
        a = DegreeSequence(values)
        assert is_graphic(a) == (values in realizable), values


@given(st.lists(st.integers(0, 30), min_size=1, max_size=30))
def test_is_graphic_matches_naive_erdos_gallai(raw):
    a = from_unsorted(raw)
    assert is_graphic(a) == erdos_gallai_naive(raw)


@given(st.lists(st.integers(0, 30), max_size=30))
def test_graphic_implies_potentially_graphic(raw):
    a = from_unsorted(raw)
    if is_graphic(a):
        assert is_potentially_graphic(a)


def test_plain_text_round_trip():
    a = parse_sequence("1 4\n1\t4\n")
    assert a.tolist() == [4, 4, 1, 1]
    assert parse_sequence(format_sequence(a)) == a


def test_plain_text_rejects_garbage():
    with pytest.raises(InvalidDegree):
        parse_sequence("1 x 2")
