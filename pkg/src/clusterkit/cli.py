"""Command-line front end.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.  Progress goes to stderr; stdout carries only results.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import catalog
from .clusters import NotMaximallyClusteredError, braid_cluster_decomposition
from .diamond import DiamondPreconditionError, diamond_reduction, inverse_diamond_reduction
from .enumerate import (
    ClassSpec, CountReport, LimitExceededError, count_class, format_table,
    verify_cluster_counts, verify_diamond_bijection, verify_tables, verify_translation,
)
from .heap import Heap, NotReducedError, heap_from_word, heap_of
from .perm import FB, FC, HEXAGON, MC, PatternSet, Permutation, classify, count_321_instances

log = logging.getLogger("clusterkit")

COUNT_CLASSES = {
    "all": (PatternSet(frozenset(), "all"), ()),
    "fc": (FC, ()),
    "fb": (FB, ()),
    "mc": (MC, ()),
    "fc-hexagon": (FC, (HEXAGON,)),
    "fb-hexagon": (FB, (HEXAGON,)),
    "mc-hexagon": (MC, (HEXAGON,)),
    "diamond-avoiding": (PatternSet.of("[321]", "[3412]", name="diamond-avoiding"), ()),
    "peak-free-diamond": (PatternSet.of("[321]", "[356124]", "[456123]", name="peak-free-diamond"), ()),
}


class UsageError(Exception):
    pass


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse permutation {text!r}: {exc}") from None


def _heap_arg(args) -> Heap:
    if args.word is not None:
        try:
            letters = [int(t) for t in args.word.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"cannot parse word {args.word!r}") from None
        rank = args.rank if args.rank else max(letters, default=0) + 1
        try:
            return heap_from_word(letters, rank, check=True)
        except (NotReducedError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    if args.perm is None:
        raise UsageError("give a permutation or --word")
    return heap_of(_perm(args.perm))


def _heap_data(h: Heap) -> dict:
    return {
        "word": list(h.word),
        "rank": h.rank,
        "points": [list(p) for p in h.to_machine()],
        "permutation": str(h.permutation()),
    }


def _decomposition_text(d) -> str:
    lines = [f"clusters: {len(d.clusters)}"]
    for (p, q), k in zip(d.clusters, d.cluster_half_lengths):
        lines.append(f"  columns {p}-{q}, half-length {k}")
    lines.append("intervals: " + " ".join(f"[{lo},{hi}]" for lo, hi in d.intervals))
    lines.append("contracted word: " + " ".join(f"s_{i}" for i in d.contracted_word()))
    lines.append(d.canonical_heap.picture())
    return "\n".join(lines)


# -- subcommands ---------------------------------------------------------------

def cmd_classify(args) -> int:
    w = _perm(args.perm)
    c = classify(w)
    n = count_321_instances(w)
    data = {"permutation": str(w), **c.as_dict(), "n_321": n}
    text = [f"permutation: {w}"]
    text += [f"{k}: {str(v).lower()}" for k, v in c.as_dict().items()]
    text.append(f"321 instances: {n}")
    if c.maximally_clustered:
        d = braid_cluster_decomposition(w)
        data["decomposition"] = d.summary()
        text.append(_decomposition_text(d))
    _emit(args, data, "\n".join(text))
    return 0


def cmd_decompose(args) -> int:
    w = _perm(args.perm)
    try:
        d = braid_cluster_decomposition(w)
    except NotMaximallyClusteredError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"permutation": str(w), **d.summary()}, _decomposition_text(d))
    return 0


def cmd_heap(args) -> int:
    h = _heap_arg(args)
    data = _heap_data(h)
    data["fully_commutative"] = h.is_lateral_convex()
    text = f"{h}\npermutation: {h.permutation()}\n{h.picture()}"
    _emit(args, data, text)
    return 0


def cmd_diamond(args) -> int:
    h = _heap_arg(args)
    try:
        if args.direction == "reduce":
            out = diamond_reduction(h, strict=not args.relaxed)
        else:
            out = inverse_diamond_reduction(h)
    except DiamondPreconditionError as exc:
        raise UsageError(str(exc)) from None
    data = {"input": _heap_data(h), "output": _heap_data(out)}
    _emit(args, data, f"{out}\npermutation: {out.permutation()}\n{out.picture()}")
    return 0


def cmd_gf(args) -> int:
    try:
        g = catalog.class_gf(args.cls, args.order)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    data = {"class": g.name, "description": g.description, "series": [str(c) for c in g.series]}
    lines = [f"{g.name}: {g.description}"]
    if g.rational is not None:
        rec = g.recurrence
        data["gf"] = g.rational.to_text()
        data["recurrence"] = rec.as_dict()
        lines.append("gf: " + g.display(args.sign))
        lines.append("recurrence: " + rec.describe("a"))
    lines.append("series: " + g.series.to_text())
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_count(args) -> int:
    if args.cls not in COUNT_CLASSES:
        raise UsageError(f"unknown class {args.cls!r}; choose from {', '.join(COUNT_CLASSES)}")
    P, H = COUNT_CLASSES[args.cls]
    spec = ClassSpec(P, H, args.cls)
    lo = args.n if args.n is not None else 1
    hi = args.n if args.n is not None else args.n_max
    counts = {}
    for n in range(lo, hi + 1):
        counts[n] = count_class(spec, n, args.jobs)
        log.info("%s: size %d -> %d", args.cls, n, counts[n])
    report = CountReport(args.cls, "brute", counts)
    if args.format == "json":
        print(report.to_jsonl())
    else:
        print(format_table([report]))
    return 0


def _verify_tables(args) -> tuple[bool, dict, str]:
    r = verify_tables(args.n_max, args.jobs)
    data = {"ok": r.ok, "rows": {row.name: row.ok for row in r.rows}}
    if args.format == "json":
        data["records"] = [json.loads(line) for line in r.to_jsonl().splitlines()]
    return r.ok, data, r.to_text()


def _verify_translation(args) -> tuple[bool, dict, str]:
    ok = True
    data, lines = {}, []
    for P, n_max in ((FC, args.n_max), (MC, min(args.n_max, 8))):
        r = verify_translation(P, [HEXAGON], n_max, args.jobs)
        ok &= r.ok
        data[P.name] = {
            "ok": r.ok,
            "translated": [str(p) for p in r.translated],
            "ideal": {str(p): v for p, v in r.ideal.items()},
            "counts": {n: list(c) for n, c in r.counts.items()},
        }
        lines.append(f"P = {P.name}, H = hexagon: translated to {', '.join(str(p) for p in r.translated)}")
        lines.append("  ideal: " + ", ".join(f"{p}={v}" for p, v in r.ideal.items()))
        lines.append("  counts: " + ", ".join(f"{n}:{a}/{b}" for n, (a, b) in r.counts.items()))
        lines.append(f"  -> {'ok' if r.ok else 'FAILED'}")
    return ok, data, "\n".join(lines)


def _verify_bijection(args) -> tuple[bool, dict, str]:
    r = verify_cluster_counts(min(args.n_max, 8), args.jobs)
    data = {
        "ok": r.ok, "checked": r.checked, "unsound": [str(w) for w in r.unsound],
        "by_clusters": [[n, k, v, r.expected.get((n, k), 0)] for (n, k), v in sorted(r.by_clusters.items())],
    }
    lines = [f"decomposed {r.checked} maximally clustered elements, {len(r.unsound)} unsound"]
    for (n, k), v in sorted(r.by_clusters.items()):
        lines.append(f"  size {n}, {k} clusters: {v} (gf {r.expected.get((n, k), 0)})")
    lines.append(f"-> {'ok' if r.ok else 'FAILED'}")
    return r.ok, data, "\n".join(lines)


def _verify_diamond(args) -> tuple[bool, dict, str]:
    r = verify_diamond_bijection(args.max_entries)
    data = {"ok": r.ok, "expanded": r.expanded, "reduced": r.reduced, "failures": r.failures}
    text = (f"reduce(expand(g)) = g on {r.expanded} heaps; expand(reduce(h)) = h on {r.reduced} heaps\n"
            + "".join(f"  {f}\n" for f in r.failures[:20]) + f"-> {'ok' if r.ok else 'FAILED'}")
    return r.ok, data, text


SUITES = {
    "tables": _verify_tables,
    "translation": _verify_translation,
    "bijection": _verify_bijection,
    "diamond": _verify_diamond,
}


def cmd_verify(args) -> int:
    ok, data, text = SUITES[args.suite](args)
    _emit(args, {"suite": args.suite, **data}, text)
    return 0 if ok else 1


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterkit", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def heap_input(p):
        p.add_argument("perm", nargs="?", help="1-line permutation, e.g. [46718235]")
        p.add_argument("--word", help="reduced word as subscripts, e.g. '2 3 1 2 4'")
        p.add_argument("--rank", type=int, help="ambient S_n for --word (default: largest letter + 1)")

    p = sub.add_parser("classify", help="pattern classes, 321 count and cluster decomposition")
    p.add_argument("perm")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="braid cluster column decomposition")
    p.add_argument("perm")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("heap", help="print the heap of a permutation or word")
    heap_input(p)
    p.set_defaults(func=cmd_heap)

    p = sub.add_parser("diamond", help="diamond reduction and its inverse")
    p.add_argument("direction", choices=("reduce", "expand"))
    heap_input(p)
    p.add_argument("--relaxed", action="store_true", help="skip the two-entries-per-internal-column check")
    p.set_defaults(func=cmd_diamond)

    p = sub.add_parser("gf", help="generating function, series and recurrence of a class")
    p.add_argument("cls", metavar="class", help=", ".join(catalog.CLASS_NAMES))
    p.add_argument("--order", type=int, default=15)
    p.add_argument("--sign", type=int, choices=(1, -1),
                   help="sign of the displayed denominator's constant term (default: conventional)")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("count", help="brute-force class sizes")
    p.add_argument("cls", metavar="class", help=", ".join(COUNT_CLASSES))
    p.add_argument("--n", type=int, help="a single size")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(SUITES))
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--max-entries", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr)
    try:
        if getattr(args, "order", 0) < 0:
            raise UsageError("--order must be nonnegative")
        return args.func(args)
    except (UsageError, LimitExceededError) as exc:
        print(f"clusterkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
