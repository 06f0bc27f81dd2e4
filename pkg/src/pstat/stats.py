"""Crossing, nesting and alignment statistics of a set partition.

Two arcs (i1, j1), (i2, j2) with i1 < i2 form exactly one of three
patterns:

* crossing   i1 < i2 < j1 < j2     (the arcs cross)
* nesting    i1 < i2 < j2 < j1     (the second sits inside the first)
* alignment  i1 < j1 <= i2 < j2    (the first ends before the second
                                    starts; the shared-endpoint case
                                    j1 = i2 counts as an alignment)

Arcs never share a left endpoint nor a right endpoint, so the three
cases are exhaustive and the counts sum to C(ed, 2) over the ed arcs.

The trace of a partition at position i is the subgraph induced on
1..i, keeping "half-arcs": a vertex x <= i is vacant when its arc
(x, y) has y > i.  Writing l_i for the number of vacant vertices just
before position i, every closer or transient i attaches to one of the
l_i vacant vertices, and its 1-based rank counted from the left is the
link rank of i.  Rank and vacancy determine the per-endpoint pattern
counts: an arc ending at i sits inside rank - 1 open arcs (nestings)
and crosses the remaining l_i - rank of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import Edge, SetPartition, edges, type_of


class StatTriple(NamedTuple):
    cr: int
    ne: int
    al: int


class CountStats(NamedTuple):
    sg: int  # singletons
    bl: int  # blocks of size >= 2
    tr: int  # transients
    ed: int  # arcs


def stat_triple(part: SetPartition) -> StatTriple:
    """Total crossings, nestings and alignments, by a pairwise arc scan."""
    es = edges(part)
    cr = ne = al = 0
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            kind = _classify(es[a], es[b])
            if kind == "cr":
                cr += 1
            elif kind == "ne":
                ne += 1
            else:
                al += 1
    return StatTriple(cr, ne, al)


def _classify(e1: Edge, e2: Edge) -> str:
    # e1.left < e2.left since edges() sorts and left endpoints are distinct
    if e1.right <= e2.left:
        return "al"
    if e1.right < e2.right:
        return "cr"
    return "ne"


def crossings(part: SetPartition) -> int:
    return stat_triple(part).cr


def nestings(part: SetPartition) -> int:
    return stat_triple(part).ne


def alignments(part: SetPartition) -> int:
    return stat_triple(part).al


def endpoint_triples(part: SetPartition) -> dict[int, StatTriple]:
    """Pattern counts attributed to each closer or transient j.

    A crossing is charged to the right endpoint of its initial arc, a
    nesting to the right endpoint of its interior arc, an alignment to
    the right endpoint of its initial arc.  Summing each component over
    all j recovers the global triple.
    """
    es = edges(part)
    typ = type_of(part)
    buckets = {j: [0, 0, 0] for j in sorted(typ.closers | typ.transients)}
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            e1, e2 = es[a], es[b]
            kind = _classify(e1, e2)
            if kind == "cr":
                buckets[e1.right][0] += 1
            elif kind == "ne":
                buckets[e2.right][1] += 1
            else:
                buckets[e1.right][2] += 1
    return {j: StatTriple(*v) for j, v in buckets.items()}


def _endpoint(part: SetPartition, j: int) -> StatTriple:
    table = endpoint_triples(part)
    if j not in table:
        raise ValueError(f"element {j} is not a closer or transient")
    return table[j]


def crossings_at(part: SetPartition, j: int) -> int:
    """Crossings whose initial arc has right endpoint j."""
    return _endpoint(part, j).cr


def nestings_at(part: SetPartition, j: int) -> int:
    """Nestings whose interior arc has right endpoint j."""
    return _endpoint(part, j).ne


def alignments_at(part: SetPartition, j: int) -> int:
    """Alignments whose initial arc has right endpoint j."""
    return _endpoint(part, j).al


@dataclass(frozen=True)
class TraceGraph:
    """Restriction of the arc diagram to 1..index, with vacant vertices.

    ``edges`` are the arcs lying entirely inside 1..index; ``vacant``
    lists, in increasing order, the vertices whose arc continues past
    index.
    """

    index: int
    edges: tuple[Edge, ...]
    vacant: tuple[int, ...]


def trace(part: SetPartition, i: int) -> TraceGraph:
    if not 0 <= i <= part.n:
        raise ValueError(f"trace index {i} out of range 0..{part.n}")
    inside = tuple(e for e in edges(part) if e.right <= i)
    vac = tuple(e.left for e in edges(part) if e.left <= i < e.right)
    return TraceGraph(i, inside, tuple(sorted(vac)))


def _sweep(part: SetPartition) -> tuple[list[int], dict[int, int]]:
    """One left-to-right pass: vacancy count before each i, and link ranks.

    Returns (counts, ranks) with counts[i-1] = l_i for 1 <= i <= n and
    ranks[j] the 1-based position of j's partner in the ascending vacant
    list, for every closer or transient j.
    """
    partner = {e.right: e.left for e in edges(part)}
    vac: list[int] = []
    counts: list[int] = []
    ranks: dict[int, int] = {}
    typ = type_of(part)
    for i in range(1, part.n + 1):
        counts.append(len(vac))
        if i in partner:
            x = partner[i]
            ranks[i] = vac.index(x) + 1
            vac.remove(x)
        if i in typ.openers or i in typ.transients:
            vac.append(i)
    return counts, ranks


def vacancy_counts(part: SetPartition) -> tuple[int, ...]:
    """l_1, ..., l_n: number of vacant vertices just before each position."""
    return tuple(_sweep(part)[0])


def vacancy_count(part: SetPartition, i: int) -> int:
    if not 1 <= i <= part.n:
        raise ValueError(f"position {i} out of range 1..{part.n}")
    return _sweep(part)[0][i - 1]


def link_ranks(part: SetPartition) -> dict[int, int]:
    """Link rank of every closer and transient (1-based, from the left)."""
    return _sweep(part)[1]


def link_rank(part: SetPartition, i: int) -> int:
    """Rank of the vacant vertex that i closes; defined only at closers
    and transients, since openers and singletons close nothing."""
    ranks = link_ranks(part)
    if i not in ranks:
        raise ValueError(f"element {i} is not a closer or transient")
    return ranks[i]


def count_stats(part: SetPartition) -> CountStats:
    """Singleton, block, transient and arc counts (ed = bl + tr)."""
    typ = type_of(part)
    sg = len(typ.singletons)
    bl = len(typ.openers)
    tr = len(typ.transients)
    return CountStats(sg, bl, tr, bl + tr)
