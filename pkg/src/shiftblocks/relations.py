"""Overlap equivalences on letters, recognition of N-block presentations and
maximal N-preimages.

For ``0 <= k < N`` two letters are ``k``-equivalent when a zigzag of
2-words links them while the running offset (``-1`` for stepping to a
successor, ``+1`` for stepping to a predecessor) stays in ``[-k, N-k)``.
In an N-block presentation, ``k``-equivalent letters agree at position ``k``
of their blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from string import ascii_uppercase
from typing import Optional

from ._unionfind import UnionFind
from .blocks import block_present
from .words import FiniteWordSet, LanguageSource, Projection, apply_projection, are_similar


class Partition:
    """A partition of an ordered alphabet into disjoint classes."""

    def __init__(self, ground, classes):
        self.ground = tuple(ground)
        self.classes = tuple(frozenset(c) for c in classes)
        self._index = {}
        for i, c in enumerate(self.classes):
            if not c:
                raise ValueError("partition classes must be nonempty")
            for x in c:
                if x in self._index:
                    raise ValueError(f"{x!r} belongs to two classes")
                self._index[x] = i
        if set(self._index) != set(self.ground):
            raise ValueError("classes do not cover the ground alphabet")

    def class_of(self, x) -> frozenset:
        return self.classes[self._index[x]]

    def same(self, a, b) -> bool:
        return self._index[a] == self._index[b]

    def as_sets(self) -> set:
        return set(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.as_sets() == other.as_sets()

    def __hash__(self):
        return hash(frozenset(self.classes))

    def __repr__(self):
        return "Partition(" + ", ".join("{" + ",".join(sorted(c)) + "}" for c in self.classes) + ")"


def _letters(src: LanguageSource) -> list:
    present = {w[0] for w in src.language(1)}
    return [a for a in src.alphabet if a in present]


def equivalence_k(src: LanguageSource, n: int, k: int) -> Partition:
    """The partition of ``L_1(src)`` into ``k``-equivalence classes for order ``n``.

    States are ``(letter, offset)`` with offset in ``[-k, n-k-1]``; every
    2-word ``xy`` links ``(x, s)`` with ``(y, s-1)``.  Two letters are
    equivalent when their offset-0 states are connected.
    """
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"k must satisfy 0 <= k < N, got k={k}, N={n}")
    letters = _letters(src)
    offsets = range(-k, n - k)
    uf = UnionFind((x, s) for x in letters for s in offsets)
    for x, y in src.language(2):
        for s in offsets:
            if s - 1 >= -k:
                uf.union((x, s), (y, s - 1))
    groups = {}
    for x in letters:
        groups.setdefault(uf.find((x, 0)), []).append(x)
    return Partition(letters, groups.values())


def partitions(src: LanguageSource, n: int) -> list:
    return [equivalence_k(src, n, k) for k in range(n)]


@dataclass(frozen=True)
class BlockCheck:
    """Outcome of :func:`is_block_presentation`; falsy when a witness exists."""

    order: int
    witness: Optional[tuple] = None

    @property
    def is_presentation(self) -> bool:
        return self.witness is None

    def __bool__(self):
        return self.is_presentation


def is_block_presentation(src: LanguageSource, n: int) -> BlockCheck:
    """Check whether every pair of distinct letters is separated by some
    ``k``-equivalence; otherwise report the first inseparable pair in
    alphabet order."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    parts = partitions(src, n)
    for a, b in combinations(_letters(src), 2):
        if all(p.same(a, b) for p in parts):
            return BlockCheck(n, (a, b))
    return BlockCheck(n)


def _successors(pairs, cls) -> set:
    return {y for x, y in pairs if x in cls}


def _predecessors(pairs, cls) -> set:
    return {x for x, y in pairs if y in cls}


def _class_containing(part: Partition, letters: set):
    """The class of ``part`` holding all of ``letters`` (None if empty)."""
    if not letters:
        return None
    first = next(iter(letters))
    cls = part.class_of(first)
    if not letters <= cls:
        raise AssertionError("neighbouring letters straddle two classes")
    return cls


def letter_name(i: int) -> str:
    """``A``, ``B``, ..., ``Z``, ``AA``, ``AB``, ..."""
    name = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        name = ascii_uppercase[r] + name
    return name


@dataclass(frozen=True)
class MaxPreimage:
    """The maximal ``order``-preimage of ``source``.

    ``pi[k][a]`` names the preimage letter sitting at position ``k`` of the
    block coding input letter ``a``; ``tuples`` gives the class tuple behind
    each name (``None`` marks an empty entry).
    """

    source: FiniteWordSet
    order: int
    word_set: FiniteWordSet
    pi: tuple
    tuples: dict

    @property
    def coding(self) -> dict:
        """Input letter -> its block over the preimage alphabet."""
        return {a: tuple(self.pi[k][a] for k in range(self.order)) for a in self.source.alphabet}

    def projection(self, k: int) -> Projection:
        return Projection.from_dict(self.pi[k], self.source.alphabet, self.word_set.alphabet)

    def letter_table(self) -> list:
        lines = []
        for name in self.word_set.alphabet:
            cells = []
            for k, cls in enumerate(self.tuples[name]):
                members = "" if cls is None else ",".join(sorted(cls))
                cells.append(f"p{k}={{{members}}}")
            lines.append(f"letter {name} : " + " ".join(cells))
        return lines


class NotABlockPresentation(ValueError):
    def __init__(self, check: BlockCheck):
        a, b = check.witness
        super().__init__(f"not a {check.order}-block presentation: letters {a} and {b} are not separated")
        self.check = check


def max_preimage(ws: FiniteWordSet, n: int) -> MaxPreimage:
    """Build the maximal ``n``-preimage of the ``n``-block presentation ``ws``."""
    check = is_block_presentation(ws, n)
    if not check:
        raise NotABlockPresentation(check)
    parts = partitions(ws, n)
    pairs = ws.language(2)

    def extend(start: int, cls) -> tuple:
        entries = [None] * n
        entries[start] = cls
        # a letter's entry k is shared by the entry k+1 of its predecessors
        for i in range(start, n - 1):
            if entries[i] is None:
                break
            entries[i + 1] = _class_containing(parts[i + 1], _predecessors(pairs, entries[i]))
        for i in range(start, 0, -1):
            if entries[i] is None:
                break
            entries[i - 1] = _class_containing(parts[i - 1], _successors(pairs, entries[i]))
        return tuple(entries)

    owner = [dict() for _ in range(n)]
    for k in range(n):
        for cls in parts[k]:
            t = extend(k, cls)
            for a in cls:
                prev = owner[k].setdefault(a, t)
                if prev != t:
                    raise AssertionError("letter claimed by two class tuples")
    # tuples reached from different starting layers must agree
    for k in range(n):
        for a, t in owner[k].items():
            for j, cls in enumerate(t):
                if cls is not None:
                    for b in cls:
                        if owner[j][b] != t:
                            raise AssertionError("inconsistent class tuples")

    decoded = []
    for u in ws.words:
        last = u[-1]
        decoded.append(tuple(owner[0][a] for a in u) + tuple(owner[k][last] for k in range(1, n)))
    names = {}
    for w in decoded:
        for t in w:
            if t not in names:
                names[t] = letter_name(len(names))
    word_set = FiniteWordSet(tuple(names[t] for t in w) for w in decoded)
    pi = tuple({a: names[owner[k][a]] for a in ws.alphabet} for k in range(n))
    return MaxPreimage(ws, n, word_set, pi, {name: t for t, name in names.items()})


def projection_to_preimage(mp: MaxPreimage, other: FiniteWordSet, n: Optional[int] = None) -> Optional[Projection]:
    """A projection ``psi`` with ``psi(mp.word_set) == other`` when ``other`` is
    an ``n``-preimage of ``mp.source``; ``None`` otherwise."""
    n = mp.order if n is None else n
    if n != mp.order:
        raise ValueError(f"preimage order {mp.order} does not match N={n}")
    if other.min_length < n:
        return None
    image, coding = block_present(other, n)
    sigma = are_similar(mp.source, image)
    if sigma is None:
        return None
    blocks = coding.blocks()
    psi = {}
    for a in mp.source.alphabet:
        block = blocks[sigma[a]]
        for k in range(n):
            c = mp.pi[k][a]
            if psi.setdefault(c, block[k]) != block[k]:
                return None
    proj = Projection.from_dict(psi, mp.word_set.alphabet, other.alphabet)
    return proj if apply_projection(proj, mp.word_set) == other else None


def induced_preimage_projection(phi: Projection, mp_x: MaxPreimage, mp_y: MaxPreimage) -> Projection:
    """Lift ``phi`` with ``phi(X) == Y`` to the maximal preimages:
    ``c -> pi_k^Y(phi(a))`` for any ``a`` with ``pi_k^X(a) == c``."""
    if mp_x.order != mp_y.order:
        raise ValueError("maximal preimages of different orders")
    if apply_projection(phi, mp_x.source) != mp_y.source:
        raise ValueError("phi does not map the first word set onto the second")
    lifted = {}
    for k in range(mp_x.order):
        for a, c in mp_x.pi[k].items():
            image = mp_y.pi[k][phi[a]]
            if lifted.setdefault(c, image) != image:
                raise ValueError(f"induced map is ill-defined at preimage letter {c}")
    proj = Projection.from_dict(lifted, mp_x.word_set.alphabet, mp_y.word_set.alphabet)
    if apply_projection(proj, mp_x.word_set) != mp_y.word_set:
        raise ValueError("induced map does not carry one preimage onto the other")
    return proj
