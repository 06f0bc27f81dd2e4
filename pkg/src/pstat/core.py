"""Set partitions of [n] = {1, ..., n} and their linear representation.

A partition is stored in canonical form: blocks sorted by increasing
minimum, elements inside a block ascending.  Drawing the elements
1, ..., n on a line and joining consecutive elements of every block by
an arc turns a partition into a graph in which each vertex is the left
endpoint of at most one arc and the right endpoint of at most one arc.
Everything downstream (pattern statistics, the exchange involution, the
path encodings) works on that picture.

Elements are classified by their position inside their block:

* opener     -- minimum of a block of size >= 2
* closer     -- maximum of a block of size >= 2
* singleton  -- sole element of its block
* transient  -- interior element of a block of size >= 3

The number n is carried explicitly rather than inferred from the
largest element, so the empty partition (n = 0) is a first-class value.

Enumeration is driven by restricted growth strings (RGS): the string
a_1 ... a_n with a_1 = 0 and a_i <= 1 + max(a_1, ..., a_{i-1}) that
records, for each element, the index of its block.  Iterating RGS in
lexicographic order enumerates all Bell(n) partitions deterministically.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple, Sequence

DEFAULT_PARTITION_CAP = 14
DEFAULT_MATCHING_CAP = 16
CAP_ENV = "PSTAT_CAP"


class ParseError(ValueError):
    """Raised on malformed partition text; carries the character offset."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _active_cap(explicit: int | None, default: int) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{CAP_ENV} must be an integer, got {env!r}") from None
    return default


class Edge(NamedTuple):
    """Arc (left, right) with left < right, joining consecutive block elements."""

    left: int
    right: int


@dataclass(frozen=True)
class SetPartition:
    """A partition of [n] in canonical form.

    ``blocks`` is a tuple of tuples: each block ascending, blocks ordered
    by strictly increasing minimum, union exactly {1, ..., n}.  Use
    :meth:`from_blocks` to build one from unsorted data.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        seen: set[int] = set()
        prev_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if any(block[i] >= block[i + 1] for i in range(len(block) - 1)):
                raise ValueError(f"block {block} not strictly ascending")
            if block[0] <= prev_min:
                raise ValueError("blocks not ordered by increasing minimum")
            prev_min = block[0]
            seen.update(block)
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], n: int | None = None) -> "SetPartition":
        """Canonicalize arbitrary block order / element order, inferring n."""
        norm = sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0])
        if n is None:
            n = max((b[-1] for b in norm), default=0)
        return cls(n, tuple(norm))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        """Build the partition whose restricted growth string is ``rgs``.

        >>> str(SetPartition.from_rgs([0, 1, 0, 2]))
        '1,3/2/4'
        """
        top = -1
        blocks: list[list[int]] = []
        for i, a in enumerate(rgs):
            if not 0 <= a <= top + 1:
                raise ValueError(f"not a restricted growth string at index {i}")
            if a == top + 1:
                blocks.append([])
                top += 1
            blocks[a].append(i + 1)
        return cls(len(rgs), tuple(tuple(b) for b in blocks))

    def rgs(self) -> tuple[int, ...]:
        """Restricted growth string: block index of each element in turn."""
        owner: dict[int, int] = {}
        for bi, block in enumerate(self.blocks):
            for x in block:
                owner[x] = bi
        return tuple(owner[i] for i in range(1, self.n + 1))

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(part: SetPartition) -> str:
    """Canonical text form: blocks joined by "/", elements by ",".

    >>> format_partition(SetPartition.from_blocks([[3], [1, 2]]))
    '1,2/3'
    """
    return "/".join(",".join(str(x) for x in b) for b in part.blocks)


def parse_partition(text: str) -> SetPartition:
    """Parse partition text into canonical form.

    Blocks are separated by "/" or "-", elements by commas or spaces, and
    an optional "n=K;" prefix fixes n explicitly (otherwise n is the
    largest element).  Input order is normalized.

    >>> str(parse_partition("2,3,7/1,9,10/8/4/5,6,11"))
    '1,9,10/2,3,7/4/5,6,11/8'
    """
    explicit_n = None
    body = text
    base = 0
    m = re.match(r"\s*n\s*=\s*(\d+)\s*;", text)
    if m:
        explicit_n = int(m.group(1))
        body = text[m.end():]
        base = m.end()
    seen: dict[int, int] = {}
    blocks: list[list[int]] = []
    for bm in re.finditer(r"[^/\-]+", body):
        elems: list[int] = []
        for tm in re.finditer(r"[^,\s]+", bm.group()):
            tok = tm.group()
            pos = base + bm.start() + tm.start()
            if not tok.isdigit():
                raise ParseError(f"invalid element {tok!r}", pos)
            val = int(tok)
            if val < 1:
                raise ParseError(f"element {val} out of range", pos)
            if explicit_n is not None and val > explicit_n:
                raise ParseError(f"element {val} exceeds n={explicit_n}", pos)
            if val in seen:
                raise ParseError(f"duplicate element {val}", pos)
            seen[val] = pos
            elems.append(val)
        if elems:
            blocks.append(elems)
    n = explicit_n if explicit_n is not None else (max(seen) if seen else 0)
    missing = sorted(set(range(1, n + 1)) - seen.keys())
    if missing:
        raise ParseError(f"elements {missing} missing from a partition of 1..{n}")
    return SetPartition.from_blocks(blocks, n=n)


def partition_to_json(part: SetPartition) -> dict:
    return {"n": part.n, "blocks": [list(b) for b in part.blocks]}


def partition_from_json(obj: Mapping) -> SetPartition:
    try:
        n = int(obj["n"])
        blocks = [[int(x) for x in b] for b in obj["blocks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad partition object: {exc}") from None
    return SetPartition.from_blocks(blocks, n=n)


def edges(part: SetPartition) -> list[Edge]:
    """Arcs between consecutive elements of each block, sorted by endpoints.

    A block of size m contributes m - 1 arcs; distinct arcs never share a
    left endpoint nor a right endpoint.
    """
    out = [
        Edge(block[i], block[i + 1])
        for block in part.blocks
        for i in range(len(block) - 1)
    ]
    out.sort()
    return out


@dataclass(frozen=True)
class PartitionType:
    """The split of [n] into openers, closers, singletons and transients.

    Validity is checked on construction: the four sets must partition
    [n], openers and closers must balance, and the running height
    (+1 per opener, -1 per closer) must stay nonnegative, with every
    transient occurring at positive height.  These are exactly the types
    realized by set partitions.
    """

    n: int
    openers: frozenset[int]
    closers: frozenset[int]
    singletons: frozenset[int]
    transients: frozenset[int]

    def __post_init__(self):
        for name in ("openers", "closers", "singletons", "transients"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        sets = (self.openers, self.closers, self.singletons, self.transients)
        total = sum(len(s) for s in sets)
        universe = set().union(*sets)
        if total != self.n or universe != set(range(1, self.n + 1)):
            raise ValueError(f"type classes do not partition 1..{self.n}")
        if len(self.openers) != len(self.closers):
            raise ValueError("openers and closers must be equinumerous")
        for i, h in enumerate(self.heights()):
            if h < 0:
                raise ValueError(f"more closers than openers among 1..{i}")
        for t in self.transients:
            if self.heights()[t - 1] == 0:
                raise ValueError(f"transient {t} has no open arc to attach to")

    def heights(self) -> tuple[int, ...]:
        """Running height h_0 = 0, h_i = h_{i-1} + 1 (opener) - 1 (closer)."""
        hs = [0]
        for i in range(1, self.n + 1):
            d = 1 if i in self.openers else -1 if i in self.closers else 0
            hs.append(hs[-1] + d)
        return tuple(hs)

    @property
    def is_matching_type(self) -> bool:
        """True when every element opens or closes, i.e. all blocks are pairs."""
        return not self.singletons and not self.transients


def type_of(part: SetPartition) -> PartitionType:
    op, cl, sg, tr = [], [], [], []
    for block in part.blocks:
        if len(block) == 1:
            sg.append(block[0])
        else:
            op.append(block[0])
            cl.append(block[-1])
            tr.extend(block[1:-1])
    return PartitionType(part.n, frozenset(op), frozenset(cl), frozenset(sg), frozenset(tr))


def build_partition(
    typ: PartitionType,
    ranks: Mapping[int, int],
    *,
    from_right: bool = False,
) -> SetPartition:
    """Assemble the partition of the given type with prescribed link ranks.

    Sweep i = 1..n keeping the list of vacant vertices (left endpoints of
    arcs still awaiting their right endpoint) in increasing order.  An
    opener becomes vacant; a singleton stands alone; a closer or
    transient joins the vacant vertex of rank ``ranks[i]`` (1-based,
    counted from the left, or from the right when ``from_right`` is set)
    and a transient then becomes vacant itself.
    """
    vac: list[int] = []
    arcs: list[tuple[int, int]] = []
    for i in range(1, typ.n + 1):
        if i in typ.openers:
            vac.append(i)
        elif i in typ.singletons:
            pass
        else:
            r = ranks[i]
            if not 1 <= r <= len(vac):
                raise ValueError(f"rank {r} out of range 1..{len(vac)} at element {i}")
            x = vac.pop(len(vac) - r if from_right else r - 1)
            arcs.append((x, i))
            if i in typ.transients:
                vac.append(i)
    return partition_from_edges(typ.n, arcs)


def partition_from_edges(n: int, arcs: Sequence[tuple[int, int]]) -> SetPartition:
    """Rebuild a partition from its arc set (arcs form vertex-disjoint chains)."""
    succ: dict[int, int] = {}
    for x, y in arcs:
        if x in succ:
            raise ValueError(f"vertex {x} is the left endpoint of two arcs")
        succ[x] = y
    right_ends = set(succ.values())
    if len(right_ends) != len(succ):
        raise ValueError("two arcs share a right endpoint")
    blocks: list[tuple[int, ...]] = []
    for start in range(1, n + 1):
        if start in right_ends:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        blocks.append(tuple(chain))
    return SetPartition(n, tuple(blocks))


def enumerate_partitions(n: int, cap: int | None = None) -> Iterator[SetPartition]:
    """All partitions of [n] in lexicographic order of their RGS.

    Yields Bell(n) partitions, starting from the one-block partition.
    The cap (default 14, overridable via the PSTAT_CAP environment
    variable or the ``cap`` argument) keeps desk-scale use honest.
    """
    limit = _active_cap(cap, DEFAULT_PARTITION_CAP)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise ValueError(f"n={n} exceeds enumeration cap {limit}")
    return _iter_partitions(n)


def _iter_partitions(n: int) -> Iterator[SetPartition]:
    if n == 0:
        yield SetPartition(0, ())
        return
    a = [0] * n
    while True:
        yield SetPartition.from_rgs(a)
        i = n - 1
        while i > 0 and a[i] > max(a[:i]):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0


def enumerate_matchings(m: int, cap: int | None = None) -> Iterator[SetPartition]:
    """All perfect matchings of [m] (m even): partitions into 2-element blocks.

    Yields (m-1)!! matchings; the smallest free vertex is paired with
    each larger free vertex in ascending order.
    """
    limit = _active_cap(cap, DEFAULT_MATCHING_CAP)
    if m < 0 or m % 2:
        raise ValueError("perfect matchings need an even number of vertices")
    if m > limit:
        raise ValueError(f"m={m} exceeds enumeration cap {limit}")
    return (
        SetPartition(m, pairs)
        for pairs in _iter_pairings(tuple(range(1, m + 1)))
    )


def _iter_pairings(free: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    if not free:
        yield ()
        return
    a = free[0]
    for k in range(1, len(free)):
        rest = free[1:k] + free[k + 1:]
        for tail in _iter_pairings(rest):
            yield ((a, free[k]),) + tail


def enumerate_by_type(typ: PartitionType) -> Iterator[SetPartition]:
    """All partitions with the given type.

    At each closer or transient j there are exactly h_{j-1} vacant
    vertices to attach to, so the fiber has size prod_j h_{j-1}; the
    product is enumerated directly rather than by filtering all of Pi_n.
    """
    heights = typ.heights()
    positions = sorted(typ.closers | typ.transients)
    choice_sets = [range(1, heights[j - 1] + 1) for j in positions]
    return (
        build_partition(typ, dict(zip(positions, combo)))
        for combo in itertools.product(*choice_sets)
    )
