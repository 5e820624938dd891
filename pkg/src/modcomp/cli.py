"""``modcomp`` command line.

Every subcommand prints a short human summary on stdout.  ``--json`` swaps it
for the machine-readable JSON object and ``--out PATH`` writes that object to
a file.  Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 oracle size guard.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Sequence

from . import census as cen
from .bdh import check_bdh, independent_module_sequence, lex_bfs
from .errors import GraphFormatError, SizeGuardError
from .generators import random_bipartite_dh, random_module_composed
from .graph import NAMED_GRAPHS, Graph, format_edge_list, named_graph, parse_edge_list
from .oracles import GUARDS, ClassId, classify
from .recognize import recognize, verify_module_sequence

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

RANDOM_FAMILIES = ("module-composed", "bdh", "gnp")


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or MIN..MAX, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _parse_sequence(tokens: Sequence[str]) -> list[int]:
    try:
        return [int(tok) for chunk in tokens for tok in chunk.split()]
    except ValueError:
        raise UsageError("sequence must be whitespace-separated vertex indices") from None


def _parse_classes(text: str) -> tuple[str, ...]:
    allowed = {c.value for c in ClassId} | set(cen.EXTRA_KEYS)
    keys = tuple(k.strip() for k in text.split(",") if k.strip())
    bad = [k for k in keys if k not in allowed]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown class {bad[0]!r}; choose from {', '.join(sorted(allowed))}")
    return keys


def _emit(args, payload: dict, summary: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(cen.report_json(payload))
    if args.json:
        sys.stdout.write(cen.report_json(payload))
    else:
        print(summary)


# --- subcommands ----------------------------------------------------------


def cmd_recognize(args) -> int:
    g = _read_graph(args.file)
    result = recognize(g)
    seq = list(result.sequence) if result.sequence is not None else None
    payload = {"n": g.n, "m": g.m, "module_composed": result.is_module_composed, "sequence": seq}
    if seq is None:
        summary = "NO: not module-composed"
    else:
        summary = "YES: module-sequence " + " ".join(map(str, seq))
    _emit(args, payload, summary)
    return EXIT_OK if seq is not None else EXIT_NO


def cmd_verify(args) -> int:
    g = _read_graph(args.file)
    seq = _parse_sequence(args.sequence)
    try:
        ok = verify_module_sequence(g, seq, independent=args.independent)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    kind = "independent module-sequence" if args.independent else "module-sequence"
    _emit(args, {"valid": ok, "independent": args.independent, "sequence": seq},
          f"{'valid' if ok else 'invalid'} {kind}")
    return EXIT_OK if ok else EXIT_NO


def cmd_bdh(args) -> int:
    g = _read_graph(args.file)
    seq = independent_module_sequence(g, args.start)
    payload = {"n": g.n, "m": g.m, "bipartite_distance_hereditary": seq is not None,
               "sequence": list(seq) if seq is not None else None}
    if seq is None:
        summary = "NO: not bipartite distance-hereditary"
    else:
        summary = "YES: independent module-sequence " + " ".join(map(str, seq))
    _emit(args, payload, summary)
    return EXIT_OK if seq is not None else EXIT_NO


def cmd_lexbfs(args) -> int:
    g = _read_graph(args.file)
    if not 0 <= args.start < g.n:
        raise UsageError(f"start vertex {args.start} out of range")
    rng = random.Random(args.seed) if args.seed is not None else None
    order = list(lex_bfs(g, args.start, rng))
    _emit(args, {"start": args.start, "seed": args.seed, "order": order}, " ".join(map(str, order)))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _read_graph(args.file)
    if args.classes is not None:
        wanted = [ClassId(k) for k in args.classes if k not in cen.EXTRA_KEYS]
    else:
        wanted = [c for c in ClassId if GUARDS[c] is None or g.n <= GUARDS[c]]
    report = classify(g, wanted).as_dict()
    result = recognize(g)
    report["moduleComposed"] = {"member": result.is_module_composed, "witness": None}
    if args.classes is None or cen.BDH in args.classes:
        report["bdh"] = {"member": check_bdh(g), "witness": None}
    width = max(map(len, report))
    lines = []
    for key in sorted(report):
        entry = report[key]
        note = f"  witness {entry['witness']}" if entry["witness"] else ""
        lines.append(f"{key:<{width}}  {'yes' if entry['member'] else 'no'}{note}")
    _emit(args, {"n": g.n, "m": g.m, "classes": report}, "\n".join(lines))
    return EXIT_OK


def cmd_generate(args) -> int:
    header = []
    if args.name is not None:
        if args.random is not None:
            raise UsageError("give either a graph name or --random, not both")
        g = named_graph(args.name, args.param)
    elif args.random is not None:
        if args.n is None:
            raise UsageError("--random needs --n")
        if args.random == "module-composed":
            g, seq = random_module_composed(args.n, args.seed)
            header.append("# module-sequence: " + " ".join(map(str, seq)))
        elif args.random == "bdh":
            g = random_bipartite_dh(args.n, args.seed)
        else:
            rng = random.Random(args.seed)
            g = Graph.from_edges(args.n, [(i, j) for i in range(args.n) for j in range(i + 1, args.n)
                                          if rng.random() < args.p])
    else:
        raise UsageError(f"give a graph name ({', '.join(NAMED_GRAPHS)}) or --random FAMILY")
    text = "\n".join(header + [format_edge_list(g).rstrip("\n")]) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {g.n} vertices, {g.m} edges to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_census(args) -> int:
    if (args.exhaustive is None) == (args.random is None):
        raise UsageError("census needs exactly one of --exhaustive N and --random COUNT")
    common = dict(classes=args.classes, jobs=args.jobs, max_counterexamples=args.max_counterexamples)
    if args.exhaustive is not None:
        lo, hi = args.exhaustive
        cfg = cen.CensusConfig(mode="exhaustive", n_min=lo, n_max=hi, family=args.family, **common)
    else:
        if args.n is None:
            raise UsageError("--random needs --n MIN..MAX")
        lo, hi = args.n
        cfg = cen.CensusConfig(mode="random", n_min=lo, n_max=hi, count=args.random,
                               p=args.p, seed=args.seed, **common)
    started = time.perf_counter()
    try:
        report = cen.run_census(cfg)
    except ValueError as exc:
        if isinstance(exc, SizeGuardError):
            raise
        raise UsageError(str(exc)) from exc
    elapsed = time.perf_counter() - started
    summary = cen.summarize(report) + f"\n  elapsed: {elapsed:.2f}s with {cfg.jobs} job(s)"
    _emit(args, report, summary)
    bad = report["total_violations"] or report["recognize_vs_bruteforce"]["disagreements"]
    return EXIT_NO if bad else EXIT_OK


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modcomp", description="Module-composed graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, helptext: str, func, file_arg: bool = True):
        p = sub.add_parser(name, help=helptext)
        if file_arg:
            p.add_argument("file", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="print JSON instead of the summary")
        p.add_argument("--out", help="also write the JSON result to this path")
        p.set_defaults(func=func)
        return p

    add("recognize", "decide module-composedness and print a module-sequence", cmd_recognize)

    p = add("verify", "check an insertion order", cmd_verify)
    p.add_argument("sequence", nargs="+", help="vertex indices in insertion order")
    p.add_argument("--independent", action="store_true", help="also require independent neighbourhoods")

    p = add("bdh", "bipartite distance-hereditary test", cmd_bdh)
    p.add_argument("--start", type=int, default=None, help="BFS root")

    p = add("lexbfs", "Lex-BFS ordering", cmd_lexbfs)
    p.add_argument("start", type=int)
    p.add_argument("--seed", type=int, default=None, help="random tie-breaking seed")

    p = add("classify", "run the class-membership oracles", cmd_classify)
    p.add_argument("--classes", type=_parse_classes, default=None, help="comma-separated class ids")

    p = sub.add_parser("generate", help="write a named or random graph as an edge list")
    p.add_argument("name", nargs="?", help=f"named graph: {', '.join(NAMED_GRAPHS)} (e.g. C5, K4, house)")
    p.add_argument("--param", type=int, default=None)
    p.add_argument("--random", choices=RANDOM_FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = add("census", "classify many graphs and tally class inclusions", cmd_census, file_arg=False)
    p.add_argument("--exhaustive", type=_parse_range, metavar="N|MIN..MAX",
                   help="every labeled graph on exactly N (or MIN..MAX) vertices")
    p.add_argument("--family", choices=sorted(cen.EXHAUSTIVE_LIMITS), default="all")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--n", type=_parse_range, metavar="MIN..MAX")
    p.add_argument("--p", type=float, default=None, help="edge probability (default: drawn per graph)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--classes", type=_parse_classes, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-counterexamples", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphFormatError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
