"""Exhaustive theorem checks over all partitions or diagrams up to a size.

Each suite sweeps every object of every size up to ``n_max``, counts
what it checked, and reports the first counterexample if any.  These
back the command line ``verify`` subcommand and the acceptance tests.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .bijection import (
    BE,
    SE,
    CharlierDiagram,
    decode_left,
    decode_right,
    encode_left,
    encode_right,
    enumerate_charlier,
    enumerate_rbm,
    involute,
    type_to_path,
)
from .core import enumerate_partitions, type_of
from .stats import (
    endpoint_triples,
    link_ranks,
    stat_triple,
    trace,
    vacancy_counts,
)
from .series import bell_poly_cf, bell_poly_enum, bell_poly_paths


@dataclass(frozen=True)
class CheckResult:
    suite: str
    n_max: int
    checked: int
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_involution(n_max: int) -> CheckResult:
    """involute is a type-preserving involution exchanging cr and ne."""
    checked = 0
    for n in range(n_max + 1):
        for part in enumerate_partitions(n):
            checked += 1
            img = involute(part)
            s, si = stat_triple(part), stat_triple(img)
            if involute(img) != part:
                return _fail("involution", n_max, checked, f"not an involution at {part}")
            if type_of(img) != type_of(part):
                return _fail("involution", n_max, checked, f"type changed at {part}")
            if (si.cr, si.ne, si.al) != (s.ne, s.cr, s.al):
                return _fail("involution", n_max, checked, f"statistics not exchanged at {part}")
    return CheckResult("involution", n_max, checked)


def check_endpoint_identities(n_max: int) -> CheckResult:
    """Per-endpoint counts match the rank/vacancy formulas and swap under
    the involution.

    For each closer or transient j with link rank r among l_j vacant
    vertices: nestings charged to j equal r - 1, crossings charged to j
    equal l_j - r, and alignments charged to j equal the number of
    openers and transients >= j.  The involution swaps the first two
    counts at every j and fixes the third.
    """
    checked = 0
    for n in range(n_max + 1):
        for part in enumerate_partitions(n):
            checked += 1
            table = endpoint_triples(part)
            ranks = link_ranks(part)
            counts = vacancy_counts(part)
            typ = type_of(part)
            opens = sorted(typ.openers | typ.transients)
            for j, triple in table.items():
                expected_al = sum(1 for x in opens if x >= j)
                if triple.ne != ranks[j] - 1 or triple.cr != counts[j - 1] - ranks[j]:
                    return _fail("lemma22", n_max, checked,
                                 f"rank identities fail at {part}, j={j}")
                if triple.al != expected_al:
                    return _fail("lemma22", n_max, checked,
                                 f"alignment identity fails at {part}, j={j}")
            img = involute(part)
            img_table = endpoint_triples(img)
            for j, triple in table.items():
                it = img_table[j]
                if (it.cr, it.ne, it.al) != (triple.ne, triple.cr, triple.al):
                    return _fail("lemma22", n_max, checked,
                                 f"per-endpoint swap fails at {part}, j={j}")
            s = stat_triple(part)
            sums = tuple(sum(t[i] for t in table.values()) for i in range(3))
            if sums != (s.cr, s.ne, s.al):
                return _fail("lemma22", n_max, checked, f"endpoint sums fail at {part}")
    return CheckResult("lemma22", n_max, checked)


def check_diagram_bijections(n_max: int) -> CheckResult:
    """Both diagram readings are bijections onto partitions of [n].

    decode_left and decode_right each hit every partition exactly once;
    they are inverted by encode_left and encode_right; the decoded
    partition has the path's type, so singleton, block and transient
    counts equal the red east, north-east and blue east step counts.
    """
    checked = 0
    for n in range(n_max + 1):
        bell = sum(1 for _ in enumerate_partitions(n))
        seen_left = set()
        seen_right = set()
        for diag in enumerate_charlier(n):
            checked += 1
            left = decode_left(diag)
            right = decode_right(diag)
            seen_left.add(left)
            seen_right.add(right)
            if encode_left(left) != diag or encode_right(right) != diag:
                return _fail("prop32", n_max, checked, f"round trip fails at {diag}")
            steps = diag.path.steps
            for part in (left, right):
                if type_to_path(type_of(part)) != diag.path:
                    return _fail("prop32", n_max, checked, f"type mismatch at {diag}")
            if (steps.count("R"), steps.count("U"), steps.count("B")) != (
                len(type_of(left).singletons),
                len(type_of(left).openers),
                len(type_of(left).transients),
            ):
                return _fail("prop32", n_max, checked, f"step counts off at {diag}")
        if len(seen_left) != bell or len(seen_right) != bell:
            return _fail("prop32", n_max, checked,
                         f"decodings not bijective at n={n}: "
                         f"{len(seen_left)}, {len(seen_right)} of {bell}")
    return CheckResult("prop32", n_max, checked)


def check_rank_identities(n_max: int) -> CheckResult:
    """At a fall or blue step j of height k with choice xi: the left
    reading has xi - 1 nestings and k - xi crossings charged to j, the
    right reading the reverse."""
    checked = 0
    for n in range(n_max + 1):
        for diag in enumerate_charlier(n):
            checked += 1
            left_t = endpoint_triples(decode_left(diag))
            right_t = endpoint_triples(decode_right(diag))
            hs = diag.path.heights()
            for j, step in enumerate(diag.path.steps, start=1):
                if step not in (SE, BE):
                    continue
                k, x = hs[j - 1], diag.xi[j - 1]
                ok = (
                    left_t[j].ne == x - 1
                    and left_t[j].cr == k - x
                    and right_t[j].cr == x - 1
                    and right_t[j].ne == k - x
                )
                if not ok:
                    return _fail("prop35", n_max, checked, f"rank split fails at {diag}, j={j}")
    return CheckResult("prop35", n_max, checked)


def check_catalan_structure(n_max: int) -> CheckResult:
    """Constant choice sequences carve out the Catalan families.

    Reading every restricted path with all xi = 1 from the right gives
    exactly the noncrossing partitions, from the left exactly the
    nonnesting ones, and the involution maps one family onto the other.
    """
    checked = 0
    for n in range(n_max + 1):
        noncrossing = {p for p in enumerate_partitions(n) if stat_triple(p).cr == 0}
        nonnesting = {p for p in enumerate_partitions(n) if stat_triple(p).ne == 0}
        from_right = set()
        from_left = set()
        for path in enumerate_rbm(n):
            checked += 1
            diag = CharlierDiagram(path, tuple(1 for _ in range(n)))
            from_right.add(decode_right(diag))
            from_left.add(decode_left(diag))
        catalan = _catalan(n)
        if not (from_right == noncrossing and len(noncrossing) == catalan):
            return _fail("catalan", n_max, checked, f"noncrossing family off at n={n}")
        if not (from_left == nonnesting and len(nonnesting) == catalan):
            return _fail("catalan", n_max, checked, f"nonnesting family off at n={n}")
        if {involute(p) for p in noncrossing} != nonnesting:
            return _fail("catalan", n_max, checked, f"involution image off at n={n}")
    return CheckResult("catalan", n_max, checked)


def _catalan(n: int) -> int:
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def check_type_symmetry(n_max: int) -> CheckResult:
    """Within every type class, the joint (cr, ne, al) distribution is
    symmetric in its first two coordinates."""
    checked = 0
    for n in range(n_max + 1):
        by_type: dict = {}
        for part in enumerate_partitions(n):
            checked += 1
            by_type.setdefault(type_of(part), Counter())[stat_triple(part)] += 1
        for typ, dist in by_type.items():
            swapped = Counter({(ne, cr, al): m for (cr, ne, al), m in dist.items()})
            if dist != swapped:
                return _fail("symmetry", n_max, checked, f"asymmetric type at n={n}: {sorted(typ.openers)}")
    return CheckResult("symmetry", n_max, checked)


def check_three_routes(n_max: int) -> CheckResult:
    """Enumeration, weighted paths and the continued fraction agree on B_n."""
    checked = 0
    for n in range(n_max + 1):
        checked += 1
        by_enum = bell_poly_enum(n)
        by_paths = bell_poly_paths(n)
        by_cf = bell_poly_cf(n)
        if not (by_enum == by_paths == by_cf):
            return _fail("threeroute", n_max, checked,
                         f"routes disagree at n={n}: {by_enum} / {by_paths} / {by_cf}")
    return CheckResult("threeroute", n_max, checked)


def _fail(suite: str, n_max: int, checked: int, message: str) -> CheckResult:
    return CheckResult(suite, n_max, checked, (message,))


SUITES = {
    "involution": check_involution,
    "lemma22": check_endpoint_identities,
    "prop32": check_diagram_bijections,
    "prop35": check_rank_identities,
    "catalan": check_catalan_structure,
    "symmetry": check_type_symmetry,
    "threeroute": check_three_routes,
}

DEFAULT_N_MAX = {
    "involution": 8,
    "lemma22": 8,
    "prop32": 7,
    "prop35": 7,
    "catalan": 8,
    "symmetry": 7,
    "threeroute": 6,
}
