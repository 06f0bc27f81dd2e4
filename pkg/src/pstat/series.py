"""Exact generating polynomials for partition statistics.

Everything here is integer-exact: a sparse polynomial in the five
variables (p, q, u1, u2, v) is a dict from exponent 5-tuples to Python
ints, zero coefficients never stored.  The joint distribution

    B_n = sum over partitions of [n] of
          p^crossings q^nestings u1^singletons u2^blocks v^transients

has three independent routes:

* direct enumeration of partitions;
* a sum over bicolored Motzkin paths, where a path of length n carries
  weight u2 per north-east step, [k]_{p,q} per south-east step of
  height k, u1 per red east step and v [k]_{p,q} per blue east step of
  height k (zero at k = 0), with [k]_{p,q} = p^{k-1} + p^{k-2} q + ... + q^{k-1};
* the coefficient of z^n in the continued fraction

    1 / (1 - b_0 z - l_1 z^2 / (1 - b_1 z - l_2 z^2 / ...))

  with b_k = u1 + [k]_{p,q} v and l_k = u2 [k]_{p,q}.

Specializing p = q, u1 = 1, u2 = v counts partitions by arcs and total
crossings + nestings; reflecting the q-exponent of each fixed-arc-count
slice about C(arcs, 2) counts partitions by alignments.  Restricting to
perfect matchings drops the z-odd part of the continued fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .core import SetPartition, enumerate_matchings, enumerate_partitions
from .bijection import BE, NE, RE, SE, enumerate_bm
from .stats import count_stats, stat_triple

_VARS = ("p", "q", "u1", "u2", "v")
_ZERO_EXP = (0, 0, 0, 0, 0)


class MultiPoly:
    """Sparse exact polynomial in (p, q, u1, u2, v) over the integers.

    Immutable; arithmetic returns new instances.  Printing uses graded
    lexicographic order: ascending total degree, and inside a degree the
    p-heaviest monomial first, e.g. ``1+2p+2q+p^2+2pq+q^2``.
    """

    __slots__ = ("_d",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        d: dict[tuple[int, ...], int] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != 5 or any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            if coef:
                d[exps] = d.get(exps, 0) + coef
                if not d[exps]:
                    del d[exps]
        self._d = d

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        i = _VARS.index(name)
        exps = tuple(1 if j == i else 0 for j in range(5))
        return cls({exps: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coef: int = 1) -> "MultiPoly":
        return cls({tuple(exps): coef})

    def terms(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(self._d.items())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._d.items(), key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])))

    def __bool__(self) -> bool:
        return bool(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._d == other._d

    def __hash__(self) -> int:
        return hash(frozenset(self._d.items()))

    def __add__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        d = dict(self._d)
        for exps, coef in other._d.items():
            d[exps] = d.get(exps, 0) + coef
        return MultiPoly(d)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self._d.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        d: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return MultiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def evaluate(self, p: int = 1, q: int = 1, u1: int = 1, u2: int = 1, v: int = 1) -> int:
        vals = (p, q, u1, u2, v)
        total = 0
        for exps, coef in self._d.items():
            term = coef
            for val, e in zip(vals, exps):
                term *= val ** e
            total += term
        return total

    def subs(self, p=None, q=None, u1=None, u2=None, v=None) -> "MultiPoly":
        """Simultaneously replace variables by ints or polynomials."""
        repl = (p, q, u1, u2, v)
        out = ZERO
        for exps, coef in self._d.items():
            term = MultiPoly.const(coef)
            for slot, e in enumerate(exps):
                if not e:
                    continue
                r = repl[slot]
                if r is None:
                    unit = tuple(e if j == slot else 0 for j in range(5))
                    term = term * MultiPoly.monomial(unit)
                else:
                    term = term * _as_poly(r) ** e
            out = out + term
        return out

    def coefficient_of(self, name: str, power: int) -> "MultiPoly":
        """The polynomial multiplying name^power (that variable removed)."""
        slot = _VARS.index(name)
        d = {}
        for exps, coef in self._d.items():
            if exps[slot] == power:
                e = list(exps)
                e[slot] = 0
                d[tuple(e)] = coef
        return MultiPoly(d)

    def degree_in(self, name: str) -> int:
        slot = _VARS.index(name)
        return max((e[slot] for e in self._d), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._d), default=0)

    def __str__(self) -> str:
        if not self._d:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            var_part = "".join(
                name + (f"^{e}" if e > 1 else "")
                for name, e in zip(_VARS, exps)
                if e
            )
            mag = abs(coef)
            if not var_part:
                body = str(mag)
            elif mag == 1:
                body = var_part
            else:
                body = f"{mag}{var_part}"
            sign = "-" if coef < 0 else "+"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"{sign}{body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def to_terms_json(self) -> list[dict]:
        return [
            {"exp": list(exps), "coef": str(coef)}
            for exps, coef in self.sorted_terms()
        ]

    @classmethod
    def from_terms_json(cls, data: Iterable[Mapping]) -> "MultiPoly":
        return cls({tuple(t["exp"]): int(t["coef"]) for t in data})


def _as_poly(x) -> MultiPoly:
    if isinstance(x, MultiPoly):
        return x
    if isinstance(x, int):
        return MultiPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
P = MultiPoly.var("p")
Q = MultiPoly.var("q")
U1 = MultiPoly.var("u1")
U2 = MultiPoly.var("u2")
V = MultiPoly.var("v")


def pq_integer(k: int) -> MultiPoly:
    """The (p,q)-integer [k] = p^{k-1} + p^{k-2} q + ... + q^{k-1}; [0] = 0.

    >>> str(pq_integer(3))
    'p^2+pq+q^2'
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return MultiPoly({(a, k - 1 - a, 0, 0, 0): 1 for a in range(k)})


@dataclass(frozen=True)
class SeriesExpansion:
    """Truncated power series in z with MultiPoly coefficients."""

    coefficients: tuple[MultiPoly, ...]

    def __getitem__(self, i: int) -> MultiPoly:
        return self.coefficients[i]

    def __len__(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class CFSpec:
    """Continued fraction 1/(1 - diag(0) z - sub(1) z^2/(1 - diag(1) z - ...)).

    ``diag(k)`` weights a level step at height k, ``sub(k)`` a fall from
    height k; both return exact polynomials (ints are coerced).
    """

    diag: Callable[[int], MultiPoly]
    sub: Callable[[int], MultiPoly]


def cf_expand(spec: CFSpec, order: int, depth: int | None = None) -> SeriesExpansion:
    """Coefficients 0..order of the continued fraction, bottom up.

    Levels >= depth cannot influence the first ``order`` coefficients
    (reaching height k and returning takes 2k steps), so the tail is cut
    there; the default depth carries one spare level.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if depth is None:
        depth = order // 2 + 2
    f = [ONE] + [ZERO] * order
    for k in range(depth - 1, -1, -1):
        dk = _as_poly(spec.diag(k))
        sk = _as_poly(spec.sub(k + 1))
        denom = [ONE]
        if order >= 1:
            denom.append(-dk)
        for m in range(2, order + 1):
            denom.append(-(sk * f[m - 2]))
        f = _series_recip(denom)
    return SeriesExpansion(tuple(f))


def _series_recip(a: list[MultiPoly]) -> list[MultiPoly]:
    # 1 / (a_0 + a_1 z + ...) truncated to len(a); needs a_0 = 1
    if a[0] != ONE:
        raise ValueError("reciprocal needs constant term 1")
    b = [ONE]
    for m in range(1, len(a)):
        acc = ZERO
        for i in range(1, m + 1):
            acc = acc + a[i] * b[m - i]
        b.append(-acc)
    return b


def cf_expand_dp(spec: CFSpec, order: int) -> SeriesExpansion:
    """Same series by a division-free walk count.

    The coefficient of z^m is the total weight of Motzkin-style walks of
    length m from height 0 back to 0, with rises free, level steps at
    height h weighted diag(h) and falls from height h weighted sub(h).
    Serves as an independent cross-check of :func:`cf_expand`.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    diag_at: dict[int, MultiPoly] = {}
    sub_at: dict[int, MultiPoly] = {}

    def d(h: int) -> MultiPoly:
        if h not in diag_at:
            diag_at[h] = _as_poly(spec.diag(h))
        return diag_at[h]

    def s(h: int) -> MultiPoly:
        if h not in sub_at:
            sub_at[h] = _as_poly(spec.sub(h))
        return sub_at[h]

    level: dict[int, MultiPoly] = {0: ONE}
    out = [ONE]
    for m in range(1, order + 1):
        nxt: dict[int, MultiPoly] = {}

        def put(h: int, w: MultiPoly) -> None:
            if w:
                nxt[h] = nxt.get(h, ZERO) + w

        for h, w in level.items():
            put(h + 1, w)
            put(h, w * d(h))
            if h > 0:
                put(h - 1, w * s(h))
        level = nxt
        out.append(level.get(0, ZERO))
    return SeriesExpansion(tuple(out))


def bell_cf_spec() -> CFSpec:
    """Level and fall weights of the five-variable partition polynomial."""
    return CFSpec(
        diag=lambda k: U1 + pq_integer(k) * V,
        sub=lambda k: U2 * pq_integer(k),
    )


def bell_poly_enum(n: int, cap: int | None = None) -> MultiPoly:
    """B_n by direct enumeration of partitions of [n]."""
    d: dict[tuple[int, ...], int] = {}
    for part in enumerate_partitions(n, cap=cap):
        cr, ne, _ = stat_triple(part)
        sg, bl, tr, _ = count_stats(part)
        e = (cr, ne, sg, bl, tr)
        d[e] = d.get(e, 0) + 1
    return MultiPoly(d)


def bell_poly_paths(n: int) -> MultiPoly:
    """B_n as a weighted sum over bicolored Motzkin paths of length n."""
    total = ZERO
    for path in enumerate_bm(n):
        hs = path.heights()
        w = ONE
        for i, step in enumerate(path.steps, start=1):
            k = hs[i - 1]
            if step == NE:
                w = w * U2
            elif step == RE:
                w = w * U1
            elif step == SE:
                w = w * pq_integer(k)
            else:
                w = w * (pq_integer(k) * V)
            if not w:
                break
        total = total + w
    return total


def bell_poly_cf(n: int) -> MultiPoly:
    """B_n as the z^n coefficient of the continued fraction."""
    return cf_expand(bell_cf_spec(), n)[n]


def matching_poly(n: int) -> MultiPoly:
    """Crossings and nestings over perfect matchings of [2n].

    The generating series is the even part of the partition continued
    fraction with u2 = 1 and u1 = v = 0, so the z^{2n} coefficient of
    the fraction with diag = 0 and sub(k) = [k]_{p,q} is returned.
    """
    spec = CFSpec(diag=lambda k: ZERO, sub=pq_integer)
    return cf_expand(spec, 2 * n)[2 * n]


def matching_poly_enum(n: int, cap: int | None = None) -> MultiPoly:
    """Same distribution by direct enumeration of matchings."""
    d: dict[tuple[int, ...], int] = {}
    for match in enumerate_matchings(2 * n, cap=cap):
        cr, ne, _ = stat_triple(match)
        e = (cr, ne, 0, 0, 0)
        d[e] = d.get(e, 0) + 1
    return MultiPoly(d)


def matching_alignment_poly(n: int) -> MultiPoly:
    """Alignments over perfect matchings of [2n].

    Every matching of [2n] has n arcs and its three pattern counts sum
    to C(n, 2), so the alignment distribution is the crossing + nesting
    distribution reflected about C(n, 2); the latter is
    ``matching_poly(n)`` at p = q.
    """
    both = matching_poly(n).subs(p=Q)
    return _reflect_q(both, n * (n - 1) // 2)


def matching_alignment_poly_enum(n: int, cap: int | None = None) -> MultiPoly:
    d: dict[tuple[int, ...], int] = {}
    for match in enumerate_matchings(2 * n, cap=cap):
        al = stat_triple(match).al
        e = (0, al, 0, 0, 0)
        d[e] = d.get(e, 0) + 1
    return MultiPoly(d)


def edge_cf_spec() -> CFSpec:
    """Partition weights specialized to p = q, u1 = 1, u2 = v.

    [k]_{q,q} = k q^{k-1}, so diag(k) = 1 + k q^{k-1} v and
    sub(k) = k q^{k-1} v; the z^n coefficient counts partitions by arcs
    (v) and crossings + nestings (q).
    """
    return CFSpec(
        diag=lambda k: ONE + pq_integer(k).subs(p=Q) * V,
        sub=lambda k: pq_integer(k).subs(p=Q) * V,
    )


def partition_edge_poly(n: int) -> MultiPoly:
    """Partitions of [n] counted by arcs (v) and crossings + nestings (q)."""
    return cf_expand(edge_cf_spec(), n)[n]


def partition_edge_poly_enum(n: int, cap: int | None = None) -> MultiPoly:
    d: dict[tuple[int, ...], int] = {}
    for part in enumerate_partitions(n, cap=cap):
        cr, ne, _ = stat_triple(part)
        ed = count_stats(part).ed
        e = (0, cr + ne, 0, 0, ed)
        d[e] = d.get(e, 0) + 1
    return MultiPoly(d)


def partition_alignment_poly(n: int) -> MultiPoly:
    """Alignments over partitions of [n].

    Partitions with k arcs have pattern counts summing to C(k, 2), so
    each fixed-arc slice of :func:`partition_edge_poly` is reflected
    about C(k, 2) in q and the slices are summed.
    """
    epoly = partition_edge_poly(n)
    total = ZERO
    for k in range(epoly.degree_in("v") + 1):
        slice_k = epoly.coefficient_of("v", k)
        if slice_k:
            total = total + _reflect_q(slice_k, k * (k - 1) // 2)
    return total


def partition_alignment_poly_enum(n: int, cap: int | None = None) -> MultiPoly:
    d: dict[tuple[int, ...], int] = {}
    for part in enumerate_partitions(n, cap=cap):
        al = stat_triple(part).al
        e = (0, al, 0, 0, 0)
        d[e] = d.get(e, 0) + 1
    return MultiPoly(d)


def _reflect_q(poly: MultiPoly, bound: int) -> MultiPoly:
    """Send q^e to q^{bound - e} for a polynomial in q alone."""
    d = {}
    for exps, coef in poly.terms():
        if any(exps[i] for i in (0, 2, 3, 4)):
            raise ValueError(f"reflection applies to polynomials in q only, got {exps}")
        e = bound - exps[1]
        if e < 0:
            raise ValueError(f"q-degree {exps[1]} exceeds reflection bound {bound}")
        d[(0, e, 0, 0, 0)] = coef
    return MultiPoly(d)
