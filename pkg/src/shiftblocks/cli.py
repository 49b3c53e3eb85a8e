"""Command-line front end: ``shiftblocks <verb> [options] FILE...``."""

from __future__ import annotations

import argparse
import json
import sys

from . import conjugacy
from .blocks import block_present
from .formats import FormatError, format_sft, format_word_set, read_source
from .letter_graphs import build_letter_graph, export_dot, is_maximal_preimage
from .relations import NotABlockPresentation, is_block_presentation, max_preimage
from .sft import Sft, block_present_sft, minimal_forbidden_words, sft_similar
from .words import FiniteWordSet, are_similar


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as a single line on stderr."""

    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _sorted_words(words):
    return sorted(words, key=lambda w: (len(w), w))


def _words_text(words):
    return "".join("word: " + " ".join(w) + "\n" for w in words)


def _need(src, kind, verb):
    if not isinstance(src, kind):
        wanted = "an SFT" if kind is Sft else "a word set"
        raise UsageError(f"{verb} needs {wanted} file")
    return src


def _mapping_lines(proj):
    return "".join(f"{a} -> {b}\n" for a, b in proj.items())


def cmd_blockify(args):
    src = read_source(args.file)
    if isinstance(src, Sft):
        out = block_present_sft(src, args.order)
        data = {"kind": "sft", "alphabet": list(out.alphabet), "step": out.step,
                "forbidden": [list(w) for w in sorted(out.forbidden)]}
        return format_sft(out), data
    try:
        out, coding = block_present(src, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = {"kind": "word-set", "words": [list(w) for w in out.words],
            "coding": {t: list(b) for t, b in sorted(coding.blocks().items())}}
    return format_word_set(out), data


def cmd_check_block(args):
    src = read_source(args.file)
    check = is_block_presentation(src, args.order)
    data = {"block_presentation": check.is_presentation,
            "witness": list(check.witness) if check.witness else None}
    text = "YES\n" if check else f"NO witness={','.join(check.witness)}\n"
    return text, data


def cmd_max_preimage(args):
    src = _need(read_source(args.file), FiniteWordSet, "max-preimage")
    try:
        mp = max_preimage(src, args.order)
    except NotABlockPresentation as exc:
        raise UsageError(str(exc)) from None
    letters = [{"name": name, "classes": [None if c is None else sorted(c) for c in mp.tuples[name]]}
               for name in mp.word_set.alphabet]
    data = {"words": [list(w) for w in mp.word_set.words], "letters": letters,
            "coding": {a: list(b) for a, b in mp.coding.items()}}
    text = format_word_set(mp.word_set) + "".join(line + "\n" for line in mp.letter_table())
    return text, data


def _graph(src, letter, order):
    try:
        return build_letter_graph(src, letter, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_letter_graph(args):
    src = read_source(args.file)
    g = _graph(src, args.letter, args.order)
    vertices = sorted(g.vertices)
    edges = sorted(tuple(sorted(e)) for e in g.edges)
    comps = [sorted(c) for c in g.components]
    data = {"letter": g.letter, "order": g.order,
            "vertices": [[i, list(u)] for i, u in vertices],
            "edges": [[[i, list(u)], [j, list(v)]] for (i, u), (j, v) in edges],
            "components": [[[i, list(u)] for i, u in c] for c in comps]}
    if args.dot:
        data["dot"] = export_dot(g)
        return export_dot(g), data
    lines = [f"letter={g.letter} order={g.order} vertices={len(vertices)} edges={len(edges)} components={len(comps)}"]
    for c in comps:
        lines.append("component: " + ", ".join(f"{i}:{' '.join(u)}" for i, u in c))
    return "\n".join(lines) + "\n", data


def cmd_is_connected(args):
    src = read_source(args.file)
    if args.letter is not None:
        g = _graph(src, args.letter, args.order)
        n = g.component_count()
        data = {"letter": args.letter, "order": args.order, "connected": n == 1, "components": n}
        return ("CONNECTED\n" if n == 1 else f"NOT-CONNECTED components={n}\n"), data
    present = {w[0] for w in src.language(1)}
    rows = [(a, _graph(src, a, args.order).component_count()) for a in src.alphabet if a in present]
    maximal = all(n == 1 for _, n in rows)
    assert maximal == is_maximal_preimage(src, args.order)
    lines = [f"{a} " + ("CONNECTED" if n == 1 else f"NOT-CONNECTED components={n}") for a, n in rows]
    lines.append("MAXIMAL-PREIMAGE " + ("YES" if maximal else "NO"))
    data = {"order": args.order, "maximal_preimage": maximal,
            "letters": [{"letter": a, "connected": n == 1, "components": n} for a, n in rows]}
    return "\n".join(lines) + "\n", data


def cmd_language(args):
    src = read_source(args.file)
    words = _sorted_words(src.language(args.order))
    return _words_text(words), {"order": args.order, "size": len(words), "words": [list(w) for w in words]}


def cmd_minimal_forbidden(args):
    src = _need(read_source(args.file), Sft, "minimal-forbidden")
    words = _sorted_words(minimal_forbidden_words(src))
    return _words_text(words), {"size": len(words), "words": [list(w) for w in words]}


def cmd_similar(args):
    a, b = read_source(args.file), read_source(args.other)
    if isinstance(a, Sft) != isinstance(b, Sft):
        raise UsageError("similar needs two word-set files or two SFT files")
    proj = sft_similar(a, b) if isinstance(a, Sft) else are_similar(a, b)
    data = {"similar": proj is not None, "map": dict(proj.items()) if proj else None}
    if proj is None:
        return "NOT-SIMILAR\n", data
    return "SIMILAR\n" + _mapping_lines(proj), data


def cmd_direct_conjugacy(args):
    x = _need(read_source(args.file), Sft, "direct-conjugacy")
    y = _need(read_source(args.other), Sft, "direct-conjugacy")
    d = conjugacy.decide_direct_conjugacy(x, y, max_iterations=args.max_iterations)
    data = {"conjugate": d.conjugate, "M": d.m, "N": d.n, "case": d.case, "reason": d.reason,
            "count_computations": d.count_computations,
            "witness": dict(d.witness.items()) if d.witness else None}
    if not d.conjugate:
        return f"NOT-CONJUGATE reason={d.reason}\n", data
    return f"CONJUGATE M={d.m} N={d.n}\n" + _mapping_lines(d.witness), data


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    parser = _Parser(prog="shiftblocks", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help, files=1, order=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if order:
            p.add_argument("-n", "--order", type=_positive, required=True)
        p.add_argument("file")
        if files == 2:
            p.add_argument("other")
        p.set_defaults(func=func)
        return p

    verb("blockify", cmd_blockify, "N-block presentation of a word set or SFT")
    verb("check-block", cmd_check_block, "is the input an N-block presentation?")
    verb("max-preimage", cmd_max_preimage, "maximal N-preimage of a word set")
    p = verb("letter-graph", cmd_letter_graph, "graph of order N of a letter")
    p.add_argument("--letter", required=True)
    p.add_argument("--dot", action="store_true", help="emit DOT text")
    p = verb("is-connected", cmd_is_connected, "N-connectedness of one letter or all letters")
    p.add_argument("--letter")
    verb("language", cmd_language, "words of length N")
    verb("minimal-forbidden", cmd_minimal_forbidden, "minimal forbidden words of an SFT", order=False)
    verb("similar", cmd_similar, "equal up to renaming letters?", files=2, order=False)
    p = verb("direct-conjugacy", cmd_direct_conjugacy, "decide direct conjugacy of two SFTs",
             files=2, order=False)
    p.add_argument("--max-iterations", type=_positive, default=10_000)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    saved = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = stdout, stderr
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    finally:
        sys.stdout, sys.stderr = saved
    try:
        text, data = args.func(args)
    except (UsageError, FormatError, OSError) as exc:
        print(f"shiftblocks {args.verb}: error: {exc}", file=stderr)
        return 2
    except Exception as exc:  # internal failure
        print(f"shiftblocks {args.verb}: internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.format == "json":
        stdout.write(json.dumps({"verb": args.verb, **data}, sort_keys=True) + "\n")
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
