"""Finite words, word sets and letter-to-letter maps.

Symbols are plain text tokens (any non-empty string without whitespace), so
composite letters such as ``[b,a,b]`` are ordinary symbols.  A word is a
tuple of symbols.  Anything exposing ``alphabet`` and ``language(n)`` can be
used as a language source; :class:`FiniteWordSet` and
:class:`shiftblocks.sft.Sft` are the two provided ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Protocol, Sequence

Symbol = str
Word = tuple  # tuple[Symbol, ...]


class LanguageSource(Protocol):
    alphabet: tuple

    def language(self, n: int) -> frozenset:
        ...


def check_symbol(token) -> Symbol:
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise ValueError(f"invalid symbol {token!r}: symbols are non-empty tokens without whitespace")
    return token


def as_word(letters) -> Word:
    """Turn a string of single-character letters or a sequence of tokens into a word."""
    w = tuple(letters)
    if not w:
        raise ValueError("words must have length at least 1")
    for s in w:
        check_symbol(s)
    return w


def factors(word: Word, n: int) -> Iterator[Word]:
    for i in range(len(word) - n + 1):
        yield word[i:i + n]


class FiniteWordSet:
    """A finite set of finite words.

    Words keep their first-seen order (used by the serializer); duplicates are
    dropped.  The alphabet is exactly the set of letters occurring in the
    words, in order of first occurrence.  Equality is set equality.
    """

    __slots__ = ("words", "alphabet", "_languages")

    def __init__(self, words: Iterable):
        self.words = tuple(dict.fromkeys(as_word(w) for w in words))
        self.alphabet = tuple(dict.fromkeys(s for w in self.words for s in w))
        self._languages = {}

    def __eq__(self, other):
        if not isinstance(other, FiniteWordSet):
            return NotImplemented
        return frozenset(self.words) == frozenset(other.words)

    def __hash__(self):
        return hash(frozenset(self.words))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word):
        return tuple(word) in set(self.words)

    def __repr__(self):
        shown = ", ".join(" ".join(w) for w in self.words[:3])
        more = ", ..." if len(self.words) > 3 else ""
        return f"FiniteWordSet([{shown}{more}])"

    @property
    def min_length(self) -> int:
        return min((len(w) for w in self.words), default=0)

    def language(self, n: int) -> frozenset:
        """All factors of length ``n`` of the words in the set."""
        if n < 1:
            raise ValueError(f"language order must be positive, got {n}")
        cache = self._languages
        if n not in cache:
            cache[n] = frozenset(f for w in self.words for f in factors(w, n))
        return cache[n]


def subwords(ws: FiniteWordSet, n: int) -> frozenset:
    return ws.language(n)


def is_n_prolongeable(src: LanguageSource, n: int) -> bool:
    """True iff every length-``n`` word extends by one letter on each side."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    longer = src.language(n + 1)
    has_left = {w[1:] for w in longer}
    has_right = {w[:-1] for w in longer}
    return all(w in has_left and w in has_right for w in src.language(n))


@dataclass(frozen=True)
class Projection:
    """A total letter-to-letter map ``source -> target``."""

    mapping: Mapping
    source: tuple
    target: tuple

    def __post_init__(self):
        missing = [a for a in self.source if a not in self.mapping]
        if missing:
            raise ValueError(f"projection is not total: no image for {missing}")
        outside = [b for b in self.mapping.values() if b not in set(self.target)]
        if outside:
            raise ValueError(f"projection images {outside} are not in the target alphabet")

    @classmethod
    def from_dict(cls, mapping: Mapping, source: Optional[Sequence] = None,
                  target: Optional[Sequence] = None) -> "Projection":
        mapping = dict(mapping)
        source = tuple(mapping) if source is None else tuple(source)
        if target is None:
            target = tuple(dict.fromkeys(mapping[a] for a in source))
        return cls(mapping, source, tuple(target))

    @classmethod
    def identity(cls, alphabet: Sequence) -> "Projection":
        return cls.from_dict({a: a for a in alphabet}, alphabet, alphabet)

    def __getitem__(self, letter):
        return self.mapping[letter]

    def __call__(self, word) -> Word:
        return tuple(self.mapping[s] for s in word)

    def __eq__(self, other):
        if not isinstance(other, Projection):
            return NotImplemented
        return dict(self.mapping) == dict(other.mapping)

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    @property
    def is_bijective(self) -> bool:
        images = [self.mapping[a] for a in self.source]
        return len(set(images)) == len(images) == len(self.target)

    def inverse(self) -> "Projection":
        if not self.is_bijective:
            raise ValueError("only bijective projections can be inverted")
        return Projection.from_dict({self.mapping[a]: a for a in self.source},
                                    self.target, self.source)

    def then(self, other: "Projection") -> "Projection":
        """The composite map: first ``self``, then ``other``."""
        return Projection.from_dict({a: other[self[a]] for a in self.source},
                                    self.source, other.target)

    def items(self):
        return ((a, self.mapping[a]) for a in self.source)


def apply_projection(p: Projection, ws: FiniteWordSet) -> FiniteWordSet:
    unknown = [a for a in ws.alphabet if a not in p.mapping]
    if unknown:
        raise ValueError(f"alphabet mismatch: projection has no image for {unknown}")
    return FiniteWordSet(p(w) for w in ws.words)


def _search_letter_maps(X: FiniteWordSet, Y: FiniteWordSet, bijective: bool):
    """Yield candidate maps L1(X) -> L1(Y) sending every word of X into Y.

    Letters of X are assigned in alphabet order, candidates tried in Y's
    alphabet order.  After each assignment every word of X must still have a
    compatible word of Y of the same length.
    """
    letters = X.alphabet
    targets = Y.alphabet
    by_length = {}
    for y in Y.words:
        by_length.setdefault(len(y), []).append(y)
    xs = X.words
    occurs = {a: [] for a in letters}
    for idx, x in enumerate(xs):
        for a in dict.fromkeys(x):
            occurs[a].append(idx)
    positions = [{a: [p for p, s in enumerate(x) if s == a] for a in dict.fromkeys(x)} for x in xs]
    cands0 = [by_length.get(len(x), []) for x in xs]
    if any(not c for c in cands0):
        return

    assign = {}
    used = set()

    def rec(depth, cands):
        if depth == len(letters):
            yield dict(assign)
            return
        # letters left must still be able to cover every unused target letter
        if not bijective:
            covered = set(assign.values())
            if len(targets) - len(covered) > len(letters) - depth:
                return
        a = letters[depth]
        for t in targets:
            if bijective and t in used:
                continue
            new = list(cands)
            ok = True
            for idx in occurs[a]:
                ps = positions[idx][a]
                kept = [y for y in cands[idx] if all(y[p] == t for p in ps)]
                if not kept:
                    ok = False
                    break
                new[idx] = kept
            if not ok:
                continue
            assign[a] = t
            used.add(t)
            yield from rec(depth + 1, new)
            del assign[a]
            used.discard(t)

    yield from rec(0, cands0)


def find_projection(X: FiniteWordSet, Y: FiniteWordSet) -> Optional[Projection]:
    """Some projection ``phi`` with ``phi(X) == Y``, or ``None``."""
    if {len(w) for w in X.words} != {len(w) for w in Y.words}:
        return None
    if len(X.alphabet) < len(Y.alphabet) or len(X) < len(Y):
        return None
    for m in _search_letter_maps(X, Y, bijective=False):
        phi = Projection.from_dict(m, X.alphabet, Y.alphabet)
        if apply_projection(phi, X) == Y:
            return phi
    return None


def are_similar(X: FiniteWordSet, Y: FiniteWordSet) -> Optional[Projection]:
    """A letter bijection ``sigma`` with ``sigma(X) == Y``, or ``None``."""
    if len(X.alphabet) != len(Y.alphabet) or len(X) != len(Y):
        return None
    if sorted(len(w) for w in X.words) != sorted(len(w) for w in Y.words):
        return None
    for m in _search_letter_maps(X, Y, bijective=True):
        sigma = Projection.from_dict(m, X.alphabet, Y.alphabet)
        if apply_projection(sigma, X) == Y:
            return sigma
    return None
