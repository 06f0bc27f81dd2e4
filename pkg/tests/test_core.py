from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pstat import (
    Edge,
    ParseError,
    PartitionType,
    SetPartition,
    build_partition,
    edges,
    enumerate_by_type,
    enumerate_matchings,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partition_from_edges,
    partition_from_json,
    partition_to_json,
    type_of,
)
from helpers import bell_number, odd_double_factorial, set_partitions

EXAMPLE = "1,9,10/2,3,7/4/5,6,11/8"


def test_parse_canonicalizes():
    assert str(parse_partition("2,3,7/1,9,10/8/4/11,6,5")) == EXAMPLE


def test_parse_alternate_separators():
    assert parse_partition("1 9 10-2 3 7-4-5 6 11-8") == parse_partition(EXAMPLE)
    assert parse_partition("n=11; 1,9,10/2,3,7/4/5,6,11/8") == parse_partition(EXAMPLE)


def test_parse_empty():
    assert parse_partition("") == SetPartition(0, ())
    assert parse_partition("n=0;") == SetPartition(0, ())


def test_parse_duplicate_element():
    with pytest.raises(ParseError, match="duplicate element 3"):
        parse_partition("1,3/2,3")


def test_parse_gap():
    with pytest.raises(ParseError, match="missing"):
        parse_partition("1,2/4")
    with pytest.raises(ParseError, match="missing"):
        parse_partition("n=5;1,2/3,4")


def test_parse_bad_token_has_position():
    with pytest.raises(ParseError) as exc:
        parse_partition("1,x/2")
    assert exc.value.position == 2


def test_parse_out_of_range():
    with pytest.raises(ParseError, match="exceeds"):
        parse_partition("n=3;1,2/3,4")
    with pytest.raises(ParseError, match="out of range"):
        parse_partition("0,1")


def test_constructor_rejects_noncanonical():
    with pytest.raises(ValueError):
        SetPartition(2, ((2,), (1,)))  # wrong block order
    with pytest.raises(ValueError):
        SetPartition(2, ((2, 1),))  # unsorted block
    with pytest.raises(ValueError):
        SetPartition(3, ((1, 2),))  # 3 uncovered
    with pytest.raises(ValueError):
        SetPartition(2, ((1, 2), ()))  # empty block


@given(set_partitions())
def test_format_parse_round_trip(part):
    assert parse_partition(format_partition(part)) == part


@given(set_partitions())
def test_rgs_round_trip(part):
    assert SetPartition.from_rgs(part.rgs()) == part


@given(set_partitions())
def test_json_round_trip(part):
    assert partition_from_json(partition_to_json(part)) == part


def test_from_rgs_rejects_invalid():
    with pytest.raises(ValueError):
        SetPartition.from_rgs([1])
    with pytest.raises(ValueError):
        SetPartition.from_rgs([0, 2])


def test_enumerate_partitions_counts():
    for n in range(9):
        assert sum(1 for _ in enumerate_partitions(n)) == bell_number(n)


def test_enumerate_partitions_distinct_and_deterministic():
    first = list(enumerate_partitions(6))
    second = list(enumerate_partitions(6))
    assert first == second
    assert len(set(first)) == len(first)
    # lexicographic RGS order starts at the one-block partition,
    # ends at the all-singleton one
    assert first[0] == SetPartition(6, ((1, 2, 3, 4, 5, 6),))
    assert first[-1] == SetPartition(6, tuple((i,) for i in range(1, 7)))


def test_enumerate_cap():
    with pytest.raises(ValueError, match="cap"):
        enumerate_partitions(15)
    with pytest.raises(ValueError, match="cap"):
        enumerate_partitions(5, cap=4)
    assert sum(1 for _ in enumerate_partitions(5, cap=5)) == bell_number(5)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("PSTAT_CAP", "3")
    with pytest.raises(ValueError, match="cap"):
        enumerate_partitions(4)
    monkeypatch.setenv("PSTAT_CAP", "15")
    assert enumerate_partitions(15) is not None
    monkeypatch.setenv("PSTAT_CAP", "junk")
    with pytest.raises(ValueError, match="PSTAT_CAP"):
        enumerate_partitions(2)


def test_enumerate_matchings_counts():
    for n in range(7):
        ms = list(enumerate_matchings(2 * n))
        assert len(ms) == odd_double_factorial(n)
        assert len(set(ms)) == len(ms)
        assert all(all(len(b) == 2 for b in m.blocks) for m in ms)
        assert all(type_of(m).is_matching_type for m in ms)


def test_enumerate_matchings_rejects_odd():
    with pytest.raises(ValueError):
        enumerate_matchings(5)


def test_edges_example():
    part = parse_partition(EXAMPLE)
    assert edges(part) == [
        Edge(1, 9), Edge(2, 3), Edge(3, 7), Edge(5, 6), Edge(6, 11), Edge(9, 10),
    ]


@given(set_partitions())
def test_edges_endpoint_uniqueness(part):
    es = edges(part)
    assert len({e.left for e in es}) == len(es)
    assert len({e.right for e in es}) == len(es)
    # a block of size m contributes m - 1 arcs
    assert len(es) == sum(len(b) - 1 for b in part.blocks)


def test_type_of_example():
    typ = type_of(parse_partition(EXAMPLE))
    assert sorted(typ.openers) == [1, 2, 5]
    assert sorted(typ.closers) == [7, 10, 11]
    assert sorted(typ.singletons) == [4, 8]
    assert sorted(typ.transients) == [3, 6, 9]
    assert not typ.is_matching_type


@given(set_partitions())
def test_type_partitions_ground_set(part):
    typ = type_of(part)
    classes = (typ.openers, typ.closers, typ.singletons, typ.transients)
    assert sum(len(c) for c in classes) == part.n
    assert set().union(*classes) == set(range(1, part.n + 1))
    assert len(typ.openers) == len(typ.closers)


def test_partition_type_validation():
    with pytest.raises(ValueError):  # closer before any opener
        PartitionType(2, frozenset({2}), frozenset({1}), frozenset(), frozenset())
    with pytest.raises(ValueError):  # unbalanced
        PartitionType(1, frozenset({1}), frozenset(), frozenset(), frozenset())
    with pytest.raises(ValueError):  # transient with nothing open
        PartitionType(3, frozenset({2}), frozenset({3}), frozenset(), frozenset({1}))
    with pytest.raises(ValueError):  # overlap / not covering
        PartitionType(2, frozenset({1}), frozenset({1}), frozenset({2}), frozenset())


def test_enumerate_by_type_fiber_example():
    typ = type_of(parse_partition(EXAMPLE))
    fiber = list(enumerate_by_type(typ))
    # heights before each closer/transient: 2, 3, 3, 2, 2, 1 -> product 72
    assert len(fiber) == 72
    assert len(set(fiber)) == 72
    assert all(type_of(p) == typ for p in fiber)
    assert parse_partition(EXAMPLE) in fiber


def test_enumerate_by_type_cross_tabulation():
    # fibers over all types tile the whole of Pi_n
    for n in range(8):
        by_type: dict[PartitionType, set] = {}
        for part in enumerate_partitions(n):
            by_type.setdefault(type_of(part), set()).add(part)
        for typ, expected in by_type.items():
            fiber = set(enumerate_by_type(typ))
            assert fiber == expected
            hs = typ.heights()
            size = 1
            for j in sorted(typ.closers | typ.transients):
                size *= hs[j - 1]
            assert len(fiber) == size


def test_build_partition_rank_out_of_range():
    typ = type_of(parse_partition("1,2"))
    with pytest.raises(ValueError, match="rank"):
        build_partition(typ, {2: 2})


def test_partition_from_edges():
    assert partition_from_edges(4, [(1, 3), (3, 4)]) == parse_partition("1,3,4/2")
    with pytest.raises(ValueError):
        partition_from_edges(3, [(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        partition_from_edges(3, [(1, 3), (2, 3)])


def test_singleton_only_type_has_single_fiber():
    typ = PartitionType(3, frozenset(), frozenset(), frozenset({1, 2, 3}), frozenset())
    assert list(enumerate_by_type(typ)) == [parse_partition("1/2/3")]
