"""Shared oracles and hypothesis strategies for the test suite.

The oracles are deliberately independent of the package internals:
Bell numbers come from the triangle recurrence, Catalan numbers from a
binomial formula, and pattern counts from a verbatim transcription of
the defining inequalities over all ordered arc pairs.
"""

from __future__ import annotations

import math

from hypothesis import strategies as st

from pstat import SetPartition, edges


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def odd_double_factorial(n: int) -> int:
    """(2n - 1)!! = 1 * 3 * 5 * ... * (2n - 1)."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def oracle_triple(part: SetPartition) -> tuple[int, int, int]:
    """Crossings, nestings, alignments straight from the inequalities."""
    es = edges(part)
    cr = sum(
        1
        for e1 in es
        for e2 in es
        if e1.left < e2.left < e1.right < e2.right
    )
    ne = sum(
        1
        for e1 in es
        for e2 in es
        if e1.left < e2.left and e2.right < e1.right
    )
    al = sum(
        1
        for e1 in es
        for e2 in es
        if e1.left < e1.right <= e2.left < e2.right
    )
    return cr, ne, al


@st.composite
def set_partitions(draw, max_n: int = 11) -> SetPartition:
    """Uniformly structured random partitions via restricted growth strings."""
    n = draw(st.integers(min_value=0, max_value=max_n))
    rgs = []
    top = 0
    for _ in range(n):
        a = draw(st.integers(min_value=0, max_value=top))
        rgs.append(a)
        top = max(top, a + 1)
    return SetPartition.from_rgs(rgs)
