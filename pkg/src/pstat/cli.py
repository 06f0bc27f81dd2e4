"""Command line front end.

    pstat stats     "1,9,10/2,3,7/4/5,6,11/8"
    pstat involute  "1,9,10/2,3,7/4/5,6,11/8" --check
    pstat charlier  encode "1,9,10/2,3,7/4/5,6,11/8"
    pstat charlier  decode-left "UUBRUBDRBDD | 1,1,2,1,1,3,2,1,1,2,1"
    pstat poly      L 3 --route all
    pstat verify    involution --n-max 8
    pstat render    "1,9,10/2,3,7/4/5,6,11/8" --traces 6

Partition text: blocks separated by "/" or "-", elements by commas or
spaces, optional "n=K;" prefix.  Diagram text: step word over U (rise),
D (fall), R (red level), B (blue level), then "|" and the comma
separated choice numbers.  Exit codes: 0 success, 2 bad input, 3 a
checked identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import (
    diagram_to_json,
    decode_left,
    decode_right,
    encode_left,
    encode_right,
    format_diagram,
    involute,
    parse_diagram,
)
from .core import ParseError, format_partition, parse_partition, partition_to_json, type_of
from .render import render_svg
from .series import (
    bell_poly_cf,
    bell_poly_enum,
    bell_poly_paths,
    matching_alignment_poly,
    matching_alignment_poly_enum,
    matching_poly,
    matching_poly_enum,
    partition_alignment_poly,
    partition_alignment_poly_enum,
    partition_edge_poly,
    partition_edge_poly_enum,
)
from .stats import count_stats, endpoint_triples, link_ranks, stat_triple, vacancy_counts
from .verify import DEFAULT_N_MAX, SUITES

_POLY_ROUTES = {
    "B": {"enum": bell_poly_enum, "paths": bell_poly_paths, "cf": bell_poly_cf},
    "L": {"enum": matching_poly_enum, "cf": matching_poly},
    "T": {"enum": matching_alignment_poly_enum, "cf": matching_alignment_poly},
    "E": {"enum": partition_edge_poly_enum, "cf": partition_edge_poly},
    "F": {"enum": partition_alignment_poly_enum, "cf": partition_alignment_poly},
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pstat",
        description="Crossing/nesting/alignment statistics of set partitions.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stats = sub.add_parser("stats", help="pattern statistics of one partition")
    p_stats.add_argument("partition")
    _format_flag(p_stats)
    p_stats.set_defaults(func=_cmd_stats)

    p_inv = sub.add_parser("involute", help="apply the crossing/nesting exchange")
    p_inv.add_argument("partition")
    p_inv.add_argument("--check", action="store_true",
                       help="verify the involution and statistic exchange on this input")
    _format_flag(p_inv)
    p_inv.set_defaults(func=_cmd_involute)

    p_ch = sub.add_parser("charlier", help="diagram encodings of partitions")
    p_ch.add_argument("direction", choices=("encode", "decode-left", "decode-right"))
    p_ch.add_argument("input", help="a partition (encode) or 'STEPS | xi,...' (decode)")
    _format_flag(p_ch)
    p_ch.set_defaults(func=_cmd_charlier)

    p_poly = sub.add_parser("poly", help="generating polynomials")
    p_poly.add_argument("family", choices=sorted(_POLY_ROUTES),
                        help="B: partitions by (p,q,u1,u2,v); L/T: matchings of [2n] "
                             "by crossings+nestings / alignments; E: partitions by "
                             "arcs and crossings+nestings; F: partitions by alignments")
    p_poly.add_argument("n", type=int)
    p_poly.add_argument("--route", choices=("enum", "paths", "cf", "all"), default="cf",
                        help="computation route; 'all' cross-checks every route")
    _format_flag(p_poly)
    p_poly.set_defaults(func=_cmd_poly)

    p_ver = sub.add_parser("verify", help="run an exhaustive identity suite")
    p_ver.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_ver.add_argument("--n-max", type=int, default=None)
    _format_flag(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_ren = sub.add_parser("render", help="SVG picture of the arc diagram")
    p_ren.add_argument("partition")
    p_ren.add_argument("--traces", type=int, default=None, metavar="I",
                       help="draw the trace at position I with its half-arcs")
    p_ren.add_argument("--format", choices=("svg",), default="svg")
    p_ren.set_defaults(func=_cmd_render)

    return parser


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _cmd_stats(args) -> int:
    part = parse_partition(args.partition)
    typ = type_of(part)
    s = stat_triple(part)
    c = count_stats(part)
    ranks = link_ranks(part)
    counts = vacancy_counts(part)
    table = endpoint_triples(part)
    rows = [
        {"j": j, "l": counts[j - 1], "gamma": ranks[j],
         "cr": t.cr, "ne": t.ne, "al": t.al}
        for j, t in sorted(table.items())
    ]
    if args.format == "json":
        _emit_json({
            "n": part.n,
            "partition": format_partition(part),
            "blocks": [list(b) for b in part.blocks],
            "openers": sorted(typ.openers),
            "closers": sorted(typ.closers),
            "singletons": sorted(typ.singletons),
            "transients": sorted(typ.transients),
            "cr": s.cr, "ne": s.ne, "al": s.al,
            "sg": c.sg, "bl": c.bl, "tr": c.tr, "ed": c.ed,
            "endpoints": rows,
        })
        return 0
    print(f"n={part.n}")
    print(f"partition={format_partition(part)}")
    print(f"openers={_fmt_set(typ.openers)} closers={_fmt_set(typ.closers)} "
          f"singletons={_fmt_set(typ.singletons)} transients={_fmt_set(typ.transients)}")
    print(f"cr={s.cr} ne={s.ne} al={s.al}")
    print(f"sg={c.sg} bl={c.bl} tr={c.tr} ed={c.ed}")
    for r in rows:
        print(f"j={r['j']} l={r['l']} gamma={r['gamma']} "
              f"cr={r['cr']} ne={r['ne']} al={r['al']}")
    return 0


def _cmd_involute(args) -> int:
    part = parse_partition(args.partition)
    img = involute(part)
    check: str | None = None
    if args.check:
        s, si = stat_triple(part), stat_triple(img)
        ok = (
            involute(img) == part
            and type_of(img) == type_of(part)
            and (si.cr, si.ne, si.al) == (s.ne, s.cr, s.al)
        )
        check = "PASS" if ok else "FAIL"
    if args.format == "json":
        obj = partition_to_json(img)
        obj["partition"] = format_partition(img)
        if check is not None:
            obj["check"] = check
        _emit_json(obj)
    else:
        print(format_partition(img))
        if check is not None:
            print(f"check={check}")
    return 3 if check == "FAIL" else 0


def _cmd_charlier(args) -> int:
    if args.direction == "encode":
        part = parse_partition(args.input)
        left, right = encode_left(part), encode_right(part)
        if args.format == "json":
            _emit_json({"left": diagram_to_json(left), "right": diagram_to_json(right)})
        else:
            print(f"left: {format_diagram(left)}")
            print(f"right: {format_diagram(right)}")
        return 0
    diag = parse_diagram(args.input)
    part = decode_left(diag) if args.direction == "decode-left" else decode_right(diag)
    if args.format == "json":
        obj = partition_to_json(part)
        obj["partition"] = format_partition(part)
        _emit_json(obj)
    else:
        print(format_partition(part))
    return 0


def _cmd_poly(args) -> int:
    routes = _POLY_ROUTES[args.family]
    if args.route == "all":
        results = {name: fn(args.n) for name, fn in routes.items()}
        values = list(results.values())
        if any(val != values[0] for val in values[1:]):
            detail = "; ".join(f"{name}: {val}" for name, val in results.items())
            print(f"error: routes disagree for {args.family}_{args.n}: {detail}",
                  file=sys.stderr)
            return 3
        chosen, poly = "all", values[0]
    else:
        if args.route not in routes:
            print(f"error: route {args.route!r} not available for family {args.family}",
                  file=sys.stderr)
            return 2
        chosen, poly = args.route, routes[args.route](args.n)
    if args.format == "json":
        _emit_json({
            "family": args.family,
            "n": args.n,
            "route": chosen,
            "poly": str(poly),
            "terms": poly.to_terms_json(),
        })
    else:
        print(poly)
    return 0


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    worst = 0
    for name in names:
        n_max = args.n_max if args.n_max is not None else DEFAULT_N_MAX[name]
        result = SUITES[name](n_max)
        results.append(result)
        if not result.passed:
            worst = 3
    if args.format == "json":
        _emit_json([
            {
                "suite": r.suite,
                "n_max": r.n_max,
                "checked": r.checked,
                "passed": r.passed,
                "failures": list(r.failures),
            }
            for r in results
        ])
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"suite={r.suite} n_max={r.n_max} checked={r.checked} {status}")
            for f in r.failures:
                print(f"  counterexample: {f}", file=sys.stderr)
    return worst


def _cmd_render(args) -> int:
    part = parse_partition(args.partition)
    if args.traces is not None and not 0 <= args.traces <= part.n:
        print(f"error: trace index {args.traces} out of range 0..{part.n}", file=sys.stderr)
        return 2
    sys.stdout.write(render_svg(part, trace_index=args.traces))
    return 0


if __name__ == "__main__":
    sys.exit(main())
