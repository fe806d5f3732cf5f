import pytest

import colored_partitions
from colored_partitions import (
    TYPE_LABELS,
    ColoredPartition,
    classify,
    count_F,
    enumerate_colored,
    in_F_intro,
    in_F_sec2,
    iter_colored,
    stats,
    target_count,
    type_counts,
)
from errors import CountMismatchError, ParameterError
from partition_enum import is_in_B, non_one_parts
from series_core import TruncatedSeries, partition_series

F_VALUES = [1, 3, 8, 18, 38]


def test_parse_and_print():
    cp = ColoredPartition.parse("4_g+3_g+2_r+2_b+2_b")
    assert cp.black.parts == (2, 2)
    assert cp.red.parts == (2,)
    assert cp.green.parts == (4, 3)
    assert cp.weight == 13
    assert str(cp) == "4_g+3_g+2_b+2_b+2_r"
    assert ColoredPartition.parse(str(cp)) == cp
    assert str(ColoredPartition()) == "()"


def test_parse_rejects_garbage():
    with pytest.raises(ParameterError):
        ColoredPartition.parse("3_q")
    with pytest.raises(ParameterError):
        ColoredPartition.parse("0_b")


def test_stats_kth_smallest_red():
    s = stats(ColoredPartition.parse("7_b+6_r+3_b+3_r+1_r"))
    assert (s.ell_b, s.ell_r, s.ell_g) == (2, 3, 0)
    assert s.k == 3
    assert s.i_k == 6
    s = stats(ColoredPartition.parse("2_b+1_r"))
    assert s.k == 2 and s.i_k is None


def test_colored_counts_are_cube_of_partition_series():
    h = partition_series(8)
    cube = h * h * h
    assert [len(enumerate_colored(n)) for n in range(9)] == list(cube.coeffs)
    assert [sum(1 for _ in iter_colored(n)) for n in range(5)] == [1, 3, 9, 22, 51]


@pytest.mark.parametrize("r", [2, 3, 4])
def test_F_first_values(r):
    assert [count_F(r, n) for n in range(5)] == F_VALUES


def test_F_does_not_depend_on_r():
    for n in range(9):
        assert len({count_F(r, n) for r in (2, 3, 4, 5)}) == 1


def test_target_count():
    assert [target_count(n) for n in range(5)] == [(v, v) for v in F_VALUES]
    for n in range(5, 16):
        enumerated, from_series = target_count(n)
        assert enumerated == from_series


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_both_formulations_agree(r):
    for n in range(9):
        for cp in iter_colored(n):
            assert in_F_intro(cp, r) == in_F_sec2(cp, r)


def test_classify_examples():
    assert classify(ColoredPartition(), 2) == "1"
    assert classify(ColoredPartition.parse("2_g+2_g"), 2) is None
    assert classify(ColoredPartition.parse("3_b+1_g"), 2) == "2"
    assert classify(ColoredPartition.parse("2_b+1_r"), 2) == "3a"
    assert classify(ColoredPartition.parse("1_b+1_r"), 2) == "3b"
    # k + i_k = 2 < r = 3
    assert classify(ColoredPartition.parse("1_b+1_r"), 3) is None
    assert classify(ColoredPartition.parse("2_b+1_r+1_g"), 2) == "4a"
    assert classify(ColoredPartition.parse("1_b+1_r+1_g"), 2) == "4b"
    # one green part >= 2 needs k + i_k - r + 1 >= 2
    assert classify(ColoredPartition.parse("1_b+1_r+2_g"), 2) is None


@pytest.mark.parametrize("r", [2, 3])
def test_type_counts_add_up_to_F(r):
    counts = type_counts(r, 8)
    assert set(counts) == set(TYPE_LABELS)
    for n in range(9):
        assert sum(counts[label][n] for label in TYPE_LABELS) == count_F(r, n)


def test_r_must_be_at_least_two():
    with pytest.raises(ParameterError):
        count_F(1, 3)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_type_4b_green_part_lies_in_G(r):
    seen = 0
    for n in range(11):
        for cp in iter_colored(n):
            if classify(cp, r) != "4b":
                continue
            s = stats(cp)
            assert is_in_B(cp.green, r, r)
            assert non_one_parts(cp.green) <= s.k + s.i_k - r
            seen += 1
    assert seen > 0


def test_target_count_raises_on_disagreement(monkeypatch):
    monkeypatch.setattr(colored_partitions, "pochhammer", lambda n, order: TruncatedSeries.one(order))
    with pytest.raises(CountMismatchError) as info:
        target_count(2)
    assert (info.value.enumerated, info.value.from_series) == (8, 5)


@pytest.mark.slow
def test_F_counts_up_to_20():
    for n in range(21):
        enumerated, _ = target_count(n)
        assert [count_F(r, n) for r in (2, 3, 4, 5)] == [enumerated] * 4


@pytest.mark.slow
def test_both_formulations_agree_up_to_18():
    for n in range(19):
        for cp in iter_colored(n):
            for r in range(2, 7):
                assert in_F_intro(cp, r) == in_F_sec2(cp, r)
