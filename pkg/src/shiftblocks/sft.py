"""Subshifts of finite type given by uniform-length forbidden languages.

An :class:`Sft` is ``step``-step: every forbidden word has length
``step + 1``.  Its language is read off the *trimmed* transition graph, so a
word belongs to ``L_n`` only if it occurs in some bi-infinite sequence.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional

from .blocks import BlockCoding
from .words import Projection, as_word, check_symbol, factors


@dataclass(frozen=True)
class TransitionGraph:
    """Allowed ``step``-words joined by allowed ``(step+1)``-words, trimmed."""

    step: int
    vertices: frozenset
    edges: frozenset

    @cached_property
    def successors(self) -> dict:
        out = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            out[e[:-1]].append(e[1:])
        return out

    @cached_property
    def predecessors(self) -> dict:
        inc = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            inc[e[1:]].append(e[:-1])
        return inc


@dataclass(frozen=True)
class Sft:
    alphabet: tuple
    step: int
    forbidden: frozenset
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "forbidden", frozenset(tuple(w) for w in self.forbidden))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has duplicate symbols")
        for a in self.alphabet:
            check_symbol(a)
        if self.step < 1:
            raise ValueError(f"step must be at least 1, got {self.step}")
        letters = set(self.alphabet)
        for w in self.forbidden:
            if len(w) != self.step + 1:
                raise ValueError(f"forbidden word {' '.join(w)} does not have length {self.step + 1}")
            unknown = [s for s in w if s not in letters]
            if unknown:
                raise ValueError(f"forbidden word uses unknown symbol {unknown[0]!r}")

    @cached_property
    def graph(self) -> TransitionGraph:
        return build_transition_graph(self)

    def language(self, n: int) -> frozenset:
        return language(self, n)

    def __repr__(self):
        return f"Sft(alphabet={list(self.alphabet)}, step={self.step}, |forbidden|={len(self.forbidden)})"


def normalize_forbidden(alphabet: Iterable, words: Iterable, step: Optional[int] = None) -> Sft:
    """Build an :class:`Sft` from forbidden words of arbitrary lengths.

    Length-1 forbidden words remove their letter from the alphabet.  The
    other words are padded on both sides with every possible context up to
    the common length ``step + 1`` (the longest word, or ``step`` if given).
    """
    alphabet = tuple(check_symbol(a) for a in alphabet)
    letters = set(alphabet)
    words = [as_word(w) for w in words]
    for w in words:
        for s in w:
            if s not in letters:
                raise ValueError(f"forbidden word {' '.join(w)} uses unknown symbol {s!r}")
    dead = {w[0] for w in words if len(w) == 1}
    alphabet = tuple(a for a in alphabet if a not in dead)
    words = [w for w in words if not dead.intersection(w)]
    needed = max((len(w) - 1 for w in words), default=1)
    if step is None:
        step = max(1, needed)
    elif step < needed:
        raise ValueError(f"step {step} is shorter than the longest forbidden word allows ({needed})")
    padded = set()
    for w in words:
        extra = step + 1 - len(w)
        for left in range(extra + 1):
            for x in product(alphabet, repeat=left):
                for y in product(alphabet, repeat=extra - left):
                    padded.add(x + w + y)
    return Sft(alphabet, max(1, step), frozenset(padded))


def build_transition_graph(sft: Sft) -> TransitionGraph:
    s = sft.step
    vertices = set(product(sft.alphabet, repeat=s))
    edges = {v + (b,) for v in vertices for b in sft.alphabet} - sft.forbidden
    out_edges = {v: set() for v in vertices}
    in_edges = {v: set() for v in vertices}
    for e in edges:
        out_edges[e[:-1]].add(e)
        in_edges[e[1:]].add(e)
    queue = deque(v for v in vertices if not out_edges[v] or not in_edges[v])
    removed = set()
    while queue:
        v = queue.popleft()
        if v in removed:
            continue
        removed.add(v)
        for e in out_edges[v] | in_edges[v]:
            edges.discard(e)
            head, tail = e[:-1], e[1:]
            out_edges[head].discard(e)
            in_edges[tail].discard(e)
            for u in (head, tail):
                if u not in removed and (not out_edges[u] or not in_edges[u]):
                    queue.append(u)
    return TransitionGraph(s, frozenset(vertices - removed), frozenset(edges))


def language(sft: Sft, n: int) -> frozenset:
    """``L_n`` of the subshift: labels of length-``n`` paths in the trimmed graph."""
    if n < 1:
        raise ValueError(f"language order must be positive, got {n}")
    cache = sft._cache
    key = ("L", n)
    if key in cache:
        return cache[key]
    g = sft.graph
    s = sft.step
    if n <= s:
        result = frozenset(f for v in g.vertices for f in factors(v, n))
    else:
        prev = language(sft, n - 1)
        succ = g.successors
        result = frozenset(w + (v[-1],) for w in prev for v in succ[w[-s:]])
    cache[key] = result
    return result


def language_size(sft: Sft, n: int) -> int:
    """``|L_n|`` by counting paths, without building the words when ``n > step``."""
    if n <= sft.step or ("L", n) in sft._cache:
        return len(language(sft, n))
    succ = sft.graph.successors
    counts = {v: 1 for v in sft.graph.vertices}
    for _ in range(n - sft.step):
        nxt = dict.fromkeys(counts, 0)
        for v, c in counts.items():
            for u in succ[v]:
                nxt[u] += c
        counts = nxt
    return sum(counts.values())


def is_empty(sft: Sft) -> bool:
    return not sft.graph.vertices


def minimal_forbidden_words(sft: Sft) -> frozenset:
    """Words of length at least 2 outside the language whose maximal proper
    prefix and suffix are both inside it.

    Only letters of ``L_1`` are used; letters that never occur in a
    bi-infinite sequence would be length-1 minimal forbidden words.
    """
    key = ("MF",)
    if key in sft._cache:
        return sft._cache[key]
    letters = sorted(w[0] for w in language(sft, 1))
    found = set()
    for m in range(2, sft.step + 3):
        shorter = language(sft, m - 1)
        current = language(sft, m)
        level = {u + (b,) for u in shorter for b in letters}
        level = {w for w in level if w[1:] in shorter and w not in current}
        if m == sft.step + 2:
            assert not level, "minimal forbidden word longer than step + 1"
        else:
            found |= level
    sft._cache[key] = frozenset(found)
    return sft._cache[key]


def _letter_signatures(sft: Sft, mf: frozenset) -> dict:
    pairs = language(sft, 2)
    sig = {}
    for (a,) in language(sft, 1):
        occ = Counter((len(w), i) for w in mf for i, s in enumerate(w) if s == a)
        sig[a] = (
            sum(1 for p in pairs if p[0] == a),
            sum(1 for p in pairs if p[1] == a),
            (a, a) in pairs,
            tuple(sorted(occ.items())),
        )
    return sig


def _ordered_letters(sft: Sft) -> list:
    present = {w[0] for w in language(sft, 1)}
    letters = [a for a in sft.alphabet if a in present]
    nbrs = {a: [] for a in letters}
    for x, y in sorted(language(sft, 2), key=lambda p: (letters.index(p[0]), letters.index(p[1]))):
        if x != y:
            nbrs[x].append(y)
            nbrs[y].append(x)
    order, seen = [], set()
    for start in letters:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            a = queue.popleft()
            order.append(a)
            for b in nbrs[a]:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
    return order


def sft_similar(a: Sft, b: Sft) -> Optional[Projection]:
    """A bijection ``L_1(a) -> L_1(b)`` carrying the language of ``a`` onto
    that of ``b``, or ``None``.

    Two SFTs are similar exactly when some letter bijection maps their sets of
    minimal forbidden words onto each other.  The search assigns letters in
    breadth-first order over the 2-word graph, restricting candidates to
    letters with the same signature and checking 2-words and fully-assigned
    minimal forbidden words after every step.
    """
    la = _ordered_letters(a)
    lb = [x for x in b.alphabet if (x,) in language(b, 1)]
    if len(la) != len(lb):
        return None
    mfa, mfb = minimal_forbidden_words(a), minimal_forbidden_words(b)
    if len(mfa) != len(mfb) or Counter(map(len, mfa)) != Counter(map(len, mfb)):
        return None
    sig_a, sig_b = _letter_signatures(a, mfa), _letter_signatures(b, mfb)
    if Counter(sig_a.values()) != Counter(sig_b.values()):
        return None
    pairs_a, pairs_b = language(a, 2), language(b, 2)
    mf_by_letter = {x: [w for w in mfa if x in w] for x in la}

    sigma = {}
    used = set()

    def fits(x, t):
        for y, u in sigma.items():
            if ((x, y) in pairs_a) != ((t, u) in pairs_b):
                return False
            if ((y, x) in pairs_a) != ((u, t) in pairs_b):
                return False
        if ((x, x) in pairs_a) != ((t, t) in pairs_b):
            return False
        sigma[x] = t
        try:
            for w in mf_by_letter[x]:
                if all(s in sigma for s in w) and tuple(sigma[s] for s in w) not in mfb:
                    return False
        finally:
            del sigma[x]
        return True

    def rec(depth):
        if depth == len(la):
            return True
        x = la[depth]
        for t in lb:
            if t in used or sig_b[t] != sig_a[x] or not fits(x, t):
                continue
            sigma[x] = t
            used.add(t)
            if rec(depth + 1):
                return True
            del sigma[x]
            used.discard(t)
        return False

    if not rec(0):
        return None
    source = sorted(la, key=lambda x: a.alphabet.index(x))
    proj = Projection.from_dict({x: sigma[x] for x in source}, source, lb)
    assert {proj(w) for w in mfa} == set(mfb)
    return proj


def block_coding(sft: Sft, n: int) -> BlockCoding:
    return BlockCoding.for_blocks(n, sorted(language(sft, n)))


def block_present_sft(sft: Sft, n: int) -> Sft:
    """The ``n``-block presentation as an SFT over the block letters ``[w]``.

    The result is ``max(1, step - n + 1)``-step: its forbidden words are the
    block words of that length plus one not coming from ``L`` of the input.
    """
    if n < 1:
        raise ValueError(f"block order must be positive, got {n}")
    t = max(1, sft.step - n + 1)
    coding = block_coding(sft, n)
    realized = {coding.encode(w) for w in language(sft, n + t)}
    alphabet = tuple(coding[w] for w in sorted(language(sft, n)))
    forbidden = frozenset(w for w in product(alphabet, repeat=t + 1) if w not in realized)
    return Sft(alphabet, t, forbidden)
