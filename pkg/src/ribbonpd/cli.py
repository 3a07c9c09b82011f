"""Command-line front end.

Exit codes: 0 on success (and on verification passes), 1 when a
verification command finds a mismatch or violation, 2 on input errors.
One-vertex graphs enter as words (``--word ABAB``); multi-vertex graphs
enter through rotation-system files (``--file``).  Edge indices are
0-based in first-occurrence order of the word (file order for files).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as graph_io
from .chord import canonical_form, from_one_vertex, parse_word, parse_words, to_ribbon_graph, enumerate_diagrams
from .core import (
    DisconnectedGraphError,
    InvalidGraphError,
    RibbonGraph,
    boundary_components,
    bouquet_bn,
    dipole_opposite,
    join,
    stats,
    tree_path,
    tree_star,
)
from .gpoly import gamma
from .pdual import edge_type, partial_dual
from .verify import (
    gmt_report,
    logconcavity_report,
    report_json,
    verify_bn,
)


class CliError(Exception):
    """Bad input; the message names the offending flag."""


def _load_graph_from(word, path, word_flag: str, file_flag: str) -> RibbonGraph:
    if (word is None) == (path is None):
        raise CliError(f"exactly one of {word_flag} or {file_flag} is required")
    if word is not None:
        try:
            return to_ribbon_graph(parse_word(word))
        except ValueError as exc:
            raise CliError(f"{word_flag}: {exc}") from None
    try:
        return graph_io.load_path(path)
    except OSError as exc:
        raise CliError(f"{file_flag}: {exc}") from None
    except ValueError as exc:
        raise CliError(f"{file_flag}: {exc}") from None


def _load_graph(args) -> RibbonGraph:
    return _load_graph_from(args.word, args.file, "--word", "--file")


def _parse_edges(g: RibbonGraph, spec: str, flag: str = "--edges") -> list[int]:
    if not spec:
        return []
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            e = int(tok)
        except ValueError:
            raise CliError(f"{flag}: {tok!r} is not an edge index") from None
        if not 0 <= e < g.num_edges:
            raise CliError(f"{flag}: unknown edge {e}")
        out.append(e)
    return out


def _print_graph(g: RibbonGraph, out: str) -> None:
    if out == "json":
        print(json.dumps(graph_io.to_json_dict(g), sort_keys=True))
    elif g.num_vertices == 1:
        print(from_one_vertex(g).text)
    else:
        sys.stdout.write(graph_io.dumps_text(g))


def _cmd_stats(args) -> int:
    for g in _iter_graph_inputs(args):
        s = stats(g)
        if args.out == "json":
            print(json.dumps({"v": s.v, "e": s.e, "f": s.f, "euler_char": s.euler_char, "genus": s.genus}, sort_keys=True))
        else:
            print(f"v={s.v} e={s.e} f={s.f} genus={s.genus}")
    return 0


def _iter_graph_inputs(args):
    """Graphs from --word/--file, or one per word with --words-file."""
    words_file = getattr(args, "words_file", None)
    if words_file is not None:
        if args.word is not None or args.file is not None:
            raise CliError("--words-file excludes --word and --file")
        try:
            with open(words_file, "r", encoding="utf-8") as fh:
                diagrams = parse_words(fh.read())
        except OSError as exc:
            raise CliError(f"--words-file: {exc}") from None
        except ValueError as exc:
            raise CliError(f"--words-file: {exc}") from None
        for d in diagrams:
            yield to_ribbon_graph(d)
        return
    yield _load_graph(args)


def _cmd_faces(args) -> int:
    g = _load_graph(args)
    walks = boundary_components(g)
    if args.out == "json":
        print(json.dumps([[f"{d}{'s' if side == 0 else 'e'}" for d, side in w] for w in walks]))
    else:
        for i, walk in enumerate(walks):
            corners = " ".join(f"{d}{'s' if side == 0 else 'e'}" for d, side in walk)
            print(f"walk {i}: {corners}")
        print(f"f={len(walks)}")
    return 0


def _cmd_pdual(args) -> int:
    g = _load_graph(args)
    dual = partial_dual(g, _parse_edges(g, args.edges))
    _print_graph(dual, args.out)
    return 0


def _cmd_type(args) -> int:
    g = _load_graph(args)
    if not 0 <= args.edge < g.num_edges:
        raise CliError(f"--edge: unknown edge {args.edge}")
    t = edge_type(g, args.edge)
    if args.out == "json":
        print(json.dumps({"edge": args.edge, "type": t}, sort_keys=True))
    else:
        print(t)
    return 0


def _cmd_gamma(args) -> int:
    for g in _iter_graph_inputs(args):
        p = gamma(g, workers=args.parallel)
        if args.out == "json":
            print(json.dumps(list(p.coeffs)))
        else:
            print(p.to_text())
    return 0


def _cmd_canon(args) -> int:
    if args.words_file is not None:
        if args.word is not None:
            raise CliError("--words-file excludes --word")
        try:
            with open(args.words_file, "r", encoding="utf-8") as fh:
                diagrams = parse_words(fh.read())
        except OSError as exc:
            raise CliError(f"--words-file: {exc}") from None
        except ValueError as exc:
            raise CliError(f"--words-file: {exc}") from None
    elif args.word is not None:
        try:
            diagrams = [parse_word(args.word)]
        except ValueError as exc:
            raise CliError(f"--word: {exc}") from None
    else:
        raise CliError("one of --word or --words-file is required")
    out = [canonical_form(d, args.reflection).text for d in diagrams]
    if args.out == "json":
        print(json.dumps(out))
    else:
        for w in out:
            print(w)
    return 0


def _cmd_join(args) -> int:
    g1 = _load_graph_from(args.word, args.file, "--word", "--file")
    g2 = _load_graph_from(args.word2, args.file2, "--word2", "--file2")
    try:
        result = join(g1, args.vertex1, args.corner1, g2, args.vertex2, args.corner2)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _print_graph(result, args.out)
    return 0


def _cmd_gen(args) -> int:
    family = args.family
    params = args.params
    try:
        if family == "bn":
            if len(params) != 1:
                raise CliError("gen bn takes one argument: the loop count")
            g = bouquet_bn(_positive(params[0], "gen bn"))
        elif family == "tree":
            if len(params) != 2 or params[0] not in ("path", "star"):
                raise CliError("gen tree takes 'path N' or 'star N'")
            n = _positive(params[1], "gen tree")
            g = tree_path(n) if params[0] == "path" else tree_star(n)
        elif family == "dipole":
            if len(params) != 1:
                raise CliError("gen dipole takes one argument: the edge count")
            g = dipole_opposite(_positive(params[0], "gen dipole"))
        else:
            raise CliError(f"unknown family {family!r} (expected bn, tree, dipole)")
    except ValueError as exc:
        raise CliError(f"gen {family}: {exc}") from None
    _print_graph(g, args.out)
    return 0


def _positive(tok: str, ctx: str) -> int:
    try:
        n = int(tok)
    except ValueError:
        raise CliError(f"{ctx}: {tok!r} is not an integer") from None
    return n


def _cmd_enumerate(args) -> int:
    if args.n < 1:
        raise CliError("--n: must be >= 1")
    words = [d.text for d in enumerate_diagrams(args.n, args.reflection)]
    if args.out == "json":
        print(json.dumps(words))
    else:
        for w in words:
            print(w)
    return 0


def _cmd_verify_bn(args) -> int:
    checks = verify_bn(args.max, workers=args.parallel)
    if args.out == "json":
        sys.stdout.write(report_json([c.to_json_dict() for c in checks]))
    else:
        for c in checks:
            print(c.to_text())
    return 0 if all(c.ok for c in checks) else 1


def _cmd_verify_gmt(args) -> int:
    reports = []
    for n in range(1, args.max + 1):
        r = gmt_report(n, args.reflection, args.parallel)
        reports.append(r)
        if args.out != "json":
            print(r.to_text())
    if args.out == "json":
        sys.stdout.write(report_json([r.to_json_dict() for r in reports]))
    return 0 if all(not r.mismatches for r in reports) else 1


def _cmd_scan_lc(args) -> int:
    reports = []
    for n in range(1, args.max + 1):
        r = logconcavity_report(n, args.reflection, args.parallel)
        reports.append(r)
        if args.out != "json":
            print(r.to_text())
    if args.out == "json":
        sys.stdout.write(report_json([r.to_json_dict() for r in reports]))
    return 0 if all(not r.logconcavity_violations for r in reports) else 1


def _add_graph_input(sub, words_file: bool = False) -> None:
    sub.add_argument("--word", help="one-vertex graph as a double-occurrence word")
    sub.add_argument("--file", help="rotation-system file (text or JSON)")
    if words_file:
        sub.add_argument("--words-file", dest="words_file", help="process every word in a file")


def _add_out(sub) -> None:
    sub.add_argument("--out", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonpd",
        description="Ribbon graphs, partial duality, and the partial-dual genus polynomial.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("stats", help="vertex/edge/face counts and genus")
    _add_graph_input(p, words_file=True)
    _add_out(p)
    p.set_defaults(func=_cmd_stats)

    p = subs.add_parser("faces", help="print the boundary walks")
    _add_graph_input(p)
    _add_out(p)
    p.set_defaults(func=_cmd_faces)

    p = subs.add_parser("pdual", help="partial dual relative to an edge subset")
    _add_graph_input(p)
    p.add_argument("--edges", default="", help="comma-separated edge indices (default: empty set)")
    _add_out(p)
    p.set_defaults(func=_cmd_pdual)

    p = subs.add_parser("type", help="classify an edge as pp/uu/pu/up")
    _add_graph_input(p)
    p.add_argument("--edge", type=int, required=True)
    _add_out(p)
    p.set_defaults(func=_cmd_type)

    p = subs.add_parser("gamma", help="partial-dual genus polynomial")
    _add_graph_input(p, words_file=True)
    p.add_argument("--parallel", type=int, default=1, metavar="K")
    _add_out(p)
    p.set_defaults(func=_cmd_gamma)

    p = subs.add_parser("join", help="ribbon join of two graphs")
    p.add_argument("--word")
    p.add_argument("--file")
    p.add_argument("--word2")
    p.add_argument("--file2")
    p.add_argument("--vertex1", type=int, default=0)
    p.add_argument("--corner1", type=int, default=0)
    p.add_argument("--vertex2", type=int, default=0)
    p.add_argument("--corner2", type=int, default=0)
    _add_out(p)
    p.set_defaults(func=_cmd_join)

    p = subs.add_parser("gen", help="named families: bn N | tree path N | tree star N | dipole N")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    _add_out(p)
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("enumerate", help="canonical chord diagrams with n chords")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reflection", action="store_true")
    _add_out(p)
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("canon", help="canonical form of a word")
    p.add_argument("--word")
    p.add_argument("--words-file", dest="words_file")
    p.add_argument("--reflection", action="store_true")
    _add_out(p)
    p.set_defaults(func=_cmd_canon)

    p = subs.add_parser("verify-bn", help="gamma of the bouquets against the closed form")
    p.add_argument("--max", type=int, default=9)
    p.add_argument("--parallel", type=int, default=1, metavar="K")
    _add_out(p)
    p.set_defaults(func=_cmd_verify_bn)

    p = subs.add_parser("verify-gmt", help="monomiality vs classifier over all diagrams")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--reflection", action="store_true")
    p.add_argument("--parallel", type=int, default=1, metavar="K")
    _add_out(p)
    p.set_defaults(func=_cmd_verify_gmt)

    p = subs.add_parser("scan-lc", help="log-concavity scan (report only)")
    p.add_argument("--max", type=int, default=5)
    p.add_argument("--reflection", action="store_true")
    p.add_argument("--parallel", type=int, default=1, metavar="K")
    _add_out(p)
    p.set_defaults(func=_cmd_scan_lc)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidGraphError, DisconnectedGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
