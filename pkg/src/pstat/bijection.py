"""The crossing/nesting exchange involution and Charlier-diagram codes.

Reading off the type of a partition step by step (opener -> north-east,
closer -> south-east, singleton -> red east, transient -> blue east)
produces a bicolored Motzkin path whose blue east steps sit at positive
height; such paths are called restricted here.  The height of step i
means its starting height h_{i-1}, which equals the vacancy count l_i
of any partition with that type.

A Charlier diagram pairs a restricted path with integers xi_1..xi_n,
where xi_i = 1 on north-east and red east steps and 1 <= xi_i <= k on
south-east and blue east steps of height k.  Diagrams of length n are
equinumerous with partitions of [n]: two inverse readings exist, one
taking xi_i as the link rank counted from the left, the other counted
from the right.  Composing one reading with the inverse of the other
yields the involution, which can also be built directly: resweep the
partition, reattaching every closer and transient at its original rank
but counted from the opposite side.  The involution preserves the type
and alignments and exchanges crossings with nestings, arc by arc.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from .core import (
    ParseError,
    PartitionType,
    SetPartition,
    build_partition,
    type_of,
)
from .stats import link_ranks, vacancy_counts

NE, SE, RE, BE = "U", "D", "R", "B"
_STEPS = (NE, SE, RE, BE)
_DELTA = {NE: 1, SE: -1, RE: 0, BE: 0}


@dataclass(frozen=True)
class LatticePath:
    """A bicolored Motzkin path: steps over {U, D, R, B}, heights >= 0,
    ending at height 0.  Blue east steps at height 0 are allowed at this
    level; see :meth:`is_restricted`."""

    steps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        bad = [s for s in self.steps if s not in _STEPS]
        if bad:
            raise ValueError(f"unknown step symbols {bad}")
        hs = self.heights()
        if any(h < 0 for h in hs):
            raise ValueError("path dips below the axis")
        if hs[-1] != 0:
            raise ValueError("path does not return to height 0")

    def __len__(self) -> int:
        return len(self.steps)

    def heights(self) -> tuple[int, ...]:
        """h_0 = 0, h_i after step i; the height of step i is h_{i-1}."""
        hs = [0]
        for s in self.steps:
            hs.append(hs[-1] + _DELTA[s])
        return tuple(hs)

    def is_restricted(self) -> bool:
        """True when every blue east step starts at positive height."""
        hs = self.heights()
        return all(hs[i] > 0 for i, s in enumerate(self.steps) if s == BE)

    def __str__(self) -> str:
        return "".join(self.steps)


def parse_path(text: str) -> LatticePath:
    compact = re.sub(r"\s+", "", text)
    return LatticePath(tuple(compact))


@dataclass(frozen=True)
class CharlierDiagram:
    """A restricted path together with a valid choice sequence xi."""

    path: LatticePath
    xi: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(self.xi))
        if not self.path.is_restricted():
            raise ValueError("blue east step at height 0")
        if len(self.xi) != len(self.path):
            raise ValueError("xi length does not match path length")
        hs = self.path.heights()
        for i, (s, x) in enumerate(zip(self.path.steps, self.xi), start=1):
            if s in (NE, RE):
                if x != 1:
                    raise ValueError(f"xi_{i} must be 1 on a {s} step")
            else:
                k = hs[i - 1]
                if not 1 <= x <= k:
                    raise ValueError(f"xi_{i}={x} out of range 1..{k}")

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(diag: CharlierDiagram) -> str:
    return f"{diag.path} | {','.join(str(x) for x in diag.xi)}"


def parse_diagram(text: str) -> CharlierDiagram:
    if "|" not in text:
        raise ParseError("expected 'STEPS | xi,xi,...'")
    steps_part, xi_part = text.split("|", 1)
    path = parse_path(steps_part)
    toks = [t for t in re.split(r"[,\s]+", xi_part.strip()) if t]
    if not all(t.isdigit() for t in toks):
        raise ParseError(f"bad xi entries in {xi_part.strip()!r}")
    return CharlierDiagram(path, tuple(int(t) for t in toks))


def diagram_to_json(diag: CharlierDiagram) -> dict:
    return {"steps": str(diag.path), "xi": list(diag.xi)}


def diagram_from_json(obj: Mapping) -> CharlierDiagram:
    try:
        steps = str(obj["steps"])
        xi = [int(x) for x in obj["xi"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad diagram object: {exc}") from None
    return CharlierDiagram(parse_path(steps), tuple(xi))


def type_to_path(typ: PartitionType) -> LatticePath:
    symbols = []
    for i in range(1, typ.n + 1):
        if i in typ.openers:
            symbols.append(NE)
        elif i in typ.closers:
            symbols.append(SE)
        elif i in typ.singletons:
            symbols.append(RE)
        else:
            symbols.append(BE)
    return LatticePath(tuple(symbols))


def path_to_type(path: LatticePath) -> PartitionType:
    groups = {NE: [], SE: [], RE: [], BE: []}
    for i, s in enumerate(path.steps, start=1):
        groups[s].append(i)
    return PartitionType(
        len(path),
        frozenset(groups[NE]),
        frozenset(groups[SE]),
        frozenset(groups[RE]),
        frozenset(groups[BE]),
    )


def involute(part: SetPartition) -> SetPartition:
    """Reattach every closer and transient at its mirrored rank.

    Sweeping left to right with the ascending vacant list, element i
    with link rank r among l_i vacant vertices is joined instead to the
    r-th vacant vertex counted from the right.  An involution: the type
    is preserved, crossings and nestings trade places (globally and per
    right endpoint), alignments stay fixed.
    """
    return build_partition(type_of(part), link_ranks(part), from_right=True)


def decode_left(diag: CharlierDiagram) -> SetPartition:
    """Partition whose link ranks, counted from the left, are the xi."""
    typ = path_to_type(diag.path)
    ranks = {i: x for i, x in enumerate(diag.xi, start=1)
             if i in typ.closers or i in typ.transients}
    return build_partition(typ, ranks, from_right=False)


def decode_right(diag: CharlierDiagram) -> SetPartition:
    """Partition whose link ranks, counted from the right, are the xi."""
    typ = path_to_type(diag.path)
    ranks = {i: x for i, x in enumerate(diag.xi, start=1)
             if i in typ.closers or i in typ.transients}
    return build_partition(typ, ranks, from_right=True)


def encode_left(part: SetPartition) -> CharlierDiagram:
    """Inverse of :func:`decode_left`: xi_j is the link rank of j."""
    path = type_to_path(type_of(part))
    ranks = link_ranks(part)
    xi = tuple(ranks.get(i, 1) for i in range(1, part.n + 1))
    return CharlierDiagram(path, xi)


def encode_right(part: SetPartition) -> CharlierDiagram:
    """Inverse of :func:`decode_right`: xi_j = l_j - rank + 1."""
    path = type_to_path(type_of(part))
    ranks = link_ranks(part)
    counts = vacancy_counts(part)
    xi = tuple(
        counts[i - 1] - ranks[i] + 1 if i in ranks else 1
        for i in range(1, part.n + 1)
    )
    return CharlierDiagram(path, xi)


def enumerate_bm(n: int) -> Iterator[LatticePath]:
    """All bicolored Motzkin paths of length n (blue allowed at height 0)."""
    return (LatticePath(w) for w in _iter_words(n, 0, restricted=False))


def enumerate_rbm(n: int) -> Iterator[LatticePath]:
    """All restricted bicolored Motzkin paths of length n, in a fixed
    order (step order U, D, R, B at each position).  There are
    Catalan(n) of them."""
    return (LatticePath(w) for w in _iter_words(n, 0, restricted=True))


def _iter_words(m: int, h: int, restricted: bool) -> Iterator[tuple[str, ...]]:
    if m == 0:
        if h == 0:
            yield ()
        return
    for s in _STEPS:
        if s == NE and h + 1 > m - 1:
            continue
        if s == SE and h == 0:
            continue
        if s in (RE, BE) and h > m - 1:
            continue
        if s == BE and restricted and h == 0:
            continue
        for tail in _iter_words(m - 1, h + _DELTA[s], restricted):
            yield (s,) + tail


def enumerate_charlier(n: int) -> Iterator[CharlierDiagram]:
    """All Charlier diagrams of length n; there are Bell(n) of them."""
    def gen() -> Iterator[CharlierDiagram]:
        for path in enumerate_rbm(n):
            hs = path.heights()
            choices = [
                range(1, hs[i - 1] + 1) if s in (SE, BE) else (1,)
                for i, s in enumerate(path.steps, start=1)
            ]
            for xi in itertools.product(*choices):
                yield CharlierDiagram(path, xi)
    return gen()
