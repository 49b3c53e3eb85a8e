"""Line-oriented text formats for word sets and SFTs.

Word sets::

    # comment
    word: b a b e c b

SFTs::

    alphabet: 0 1
    forbidden: 1 1

``#`` starts a comment anywhere on a line.  An SFT file may carry a
``step: k`` line; it is only needed when the forbidden list is empty.
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

from .sft import Sft, normalize_forbidden
from .words import FiniteWordSet, check_symbol


class FormatError(ValueError):
    pass


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: value', got {raw.strip()!r}")
        yield lineno, key.strip(), rest.split()


def _tokens(lineno, tokens):
    if not tokens:
        raise FormatError(f"line {lineno}: empty symbol list")
    try:
        return tuple(check_symbol(t) for t in tokens)
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}") from None


def parse_word_set(text: str) -> FiniteWordSet:
    words = []
    for lineno, key, tokens in _records(text):
        if key != "word":
            raise FormatError(f"line {lineno}: unknown key {key!r} in a word-set file")
        words.append(_tokens(lineno, tokens))
    return FiniteWordSet(words)


def format_word_set(ws: FiniteWordSet) -> str:
    return "".join("word: " + " ".join(w) + "\n" for w in ws.words)


def parse_sft(text: str) -> Sft:
    alphabet = None
    step = None
    forbidden = []
    for lineno, key, tokens in _records(text):
        if key == "alphabet":
            if alphabet is not None:
                raise FormatError(f"line {lineno}: second alphabet line")
            alphabet = _tokens(lineno, tokens)
            if len(set(alphabet)) != len(alphabet):
                raise FormatError(f"line {lineno}: duplicate symbols in alphabet")
        elif key == "forbidden":
            forbidden.append((lineno, _tokens(lineno, tokens)))
        elif key == "step":
            if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
                raise FormatError(f"line {lineno}: step must be one positive integer")
            step = int(tokens[0])
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r} in an SFT file")
    if alphabet is None:
        raise FormatError("SFT file has no alphabet line")
    known = set(alphabet)
    for lineno, w in forbidden:
        unknown = [s for s in w if s not in known]
        if unknown:
            raise FormatError(f"line {lineno}: forbidden word uses unknown symbol {unknown[0]!r}")
    try:
        return normalize_forbidden(alphabet, [w for _, w in forbidden], step=step)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_sft(sft: Sft) -> str:
    lines = ["alphabet: " + " ".join(sft.alphabet)]
    if not sft.forbidden and sft.step != 1:
        lines.append(f"step: {sft.step}")
    lines += ["forbidden: " + " ".join(w) for w in sorted(sft.forbidden)]
    return "\n".join(lines) + "\n"


def parse_source(text: str) -> Union[FiniteWordSet, Sft]:
    """Parse either format, telling them apart by their keys."""
    keys = {key for _, key, _ in _records(text)}
    if keys & {"alphabet", "forbidden", "step"}:
        return parse_sft(text)
    return parse_word_set(text)


def format_source(src) -> str:
    if isinstance(src, Sft):
        return format_sft(src)
    return format_word_set(src)


def read_source(path) -> Union[FiniteWordSet, Sft]:
    return parse_source(Path(path).read_text(encoding="utf-8"))
