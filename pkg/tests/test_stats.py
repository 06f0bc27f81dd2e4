from __future__ import annotations

import math

import pytest
from hypothesis import given

from pstat import (
    StatTriple,
    alignments,
    alignments_at,
    count_stats,
    crossings,
    crossings_at,
    endpoint_triples,
    enumerate_partitions,
    link_rank,
    link_ranks,
    nestings,
    nestings_at,
    parse_partition,
    stat_triple,
    trace,
    type_of,
    type_to_path,
    vacancy_count,
    vacancy_counts,
)
from helpers import oracle_triple, set_partitions

EXAMPLE = parse_partition("1,9,10/2,3,7/4/5,6,11/8")


def test_example_triple():
    assert stat_triple(EXAMPLE) == StatTriple(2, 5, 8)
    assert crossings(EXAMPLE) == 2
    assert nestings(EXAMPLE) == 5
    assert alignments(EXAMPLE) == 8


def test_example_counts():
    assert count_stats(EXAMPLE) == (2, 3, 3, 6)


def test_small_pattern_cases():
    assert stat_triple(parse_partition("1,3/2,4")) == (1, 0, 0)
    assert stat_triple(parse_partition("1,4/2,3")) == (0, 1, 0)
    assert stat_triple(parse_partition("1,2/3,4")) == (0, 0, 1)
    # shared endpoint counts as an alignment
    assert stat_triple(parse_partition("1,2,3")) == (0, 0, 1)


def test_example_vacancy_profile():
    assert vacancy_counts(EXAMPLE) == (0, 1, 2, 2, 2, 3, 3, 2, 2, 2, 1)
    assert vacancy_count(EXAMPLE, 6) == 3
    with pytest.raises(ValueError):
        vacancy_count(EXAMPLE, 0)
    with pytest.raises(ValueError):
        vacancy_count(EXAMPLE, 12)


def test_example_link_ranks():
    assert link_ranks(EXAMPLE) == {3: 2, 6: 3, 7: 2, 9: 1, 10: 2, 11: 1}
    assert link_rank(EXAMPLE, 6) == 3


def test_link_rank_undefined_at_openers_and_singletons():
    with pytest.raises(ValueError):
        link_rank(EXAMPLE, 1)  # opener
    with pytest.raises(ValueError):
        link_rank(EXAMPLE, 4)  # singleton


def test_example_endpoint_table():
    assert endpoint_triples(EXAMPLE) == {
        3: StatTriple(0, 1, 4),
        6: StatTriple(0, 2, 2),
        7: StatTriple(1, 1, 1),
        9: StatTriple(1, 0, 1),
        10: StatTriple(0, 1, 0),
        11: StatTriple(0, 0, 0),
    }
    assert crossings_at(EXAMPLE, 7) == 1
    assert nestings_at(EXAMPLE, 7) == 1
    assert alignments_at(EXAMPLE, 7) == 1
    with pytest.raises(ValueError):
        crossings_at(EXAMPLE, 4)


def test_example_traces():
    d6 = trace(EXAMPLE, 6)
    assert d6.vacant == (1, 3, 6)
    assert d6.edges == ((2, 3), (5, 6))
    assert trace(EXAMPLE, 0).edges == ()
    assert trace(EXAMPLE, 0).vacant == ()
    full = trace(EXAMPLE, 11)
    assert len(full.edges) == 6 and full.vacant == ()
    with pytest.raises(ValueError):
        trace(EXAMPLE, 12)


def test_exhaustive_against_oracle():
    for n in range(8):
        for part in enumerate_partitions(n):
            assert tuple(stat_triple(part)) == oracle_triple(part)


@given(set_partitions())
def test_oracle_agreement_random(part):
    assert tuple(stat_triple(part)) == oracle_triple(part)


@given(set_partitions())
def test_trichotomy(part):
    s = stat_triple(part)
    ed = count_stats(part).ed
    assert s.cr + s.ne + s.al == math.comb(ed, 2)


@given(set_partitions())
def test_endpoint_sums_match_globals(part):
    table = endpoint_triples(part)
    s = stat_triple(part)
    assert sum(t.cr for t in table.values()) == s.cr
    assert sum(t.ne for t in table.values()) == s.ne
    assert sum(t.al for t in table.values()) == s.al


def test_rank_identities_exhaustive():
    # nestings at j = rank - 1, crossings at j = vacancy - rank,
    # alignments at j = openers and transients >= j
    for n in range(8):
        for part in enumerate_partitions(n):
            table = endpoint_triples(part)
            ranks = link_ranks(part)
            counts = vacancy_counts(part)
            typ = type_of(part)
            opens = sorted(typ.openers | typ.transients)
            for j, t in table.items():
                assert t.ne == ranks[j] - 1
                assert t.cr == counts[j - 1] - ranks[j]
                assert t.al == sum(1 for x in opens if x >= j)


@given(set_partitions())
def test_vacancy_equals_path_height(part):
    path = type_to_path(type_of(part))
    assert vacancy_counts(part) == path.heights()[:-1]


@given(set_partitions())
def test_rank_bounds(part):
    counts = vacancy_counts(part)
    for j, r in link_ranks(part).items():
        assert 1 <= r <= counts[j - 1]


@given(set_partitions())
def test_trace_vacancy_consistency(part):
    # the sweep-based counts equal the trace-based ones
    for i in range(1, part.n + 1):
        assert len(trace(part, i - 1).vacant) == vacancy_counts(part)[i - 1]
