"""Graphs of pointed words around a letter, and what their connectivity says
about maximal preimages."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from ._unionfind import UnionFind
from .blocks import block_letter, block_present
from .sft import Sft, block_present_sft
from .words import FiniteWordSet, LanguageSource


@dataclass(frozen=True)
class LetterGraph:
    """The ``order``-partite graph of ``letter``.

    Vertices are pairs ``(i, u)`` with ``u`` a word of length ``order`` in the
    source and ``u[i] == letter``.  An edge joins ``(i, w[:-1])`` and
    ``(i-1, w[1:])`` for every ``(order+1)``-word ``w`` with ``w[i] == letter``.
    """

    letter: str
    order: int
    vertices: frozenset
    edges: frozenset  # frozensets of two vertices

    @cached_property
    def components(self) -> list:
        uf = UnionFind(sorted(self.vertices))
        for e in self.edges:
            u, v = tuple(e)
            uf.union(u, v)
        return [frozenset(g) for g in uf.groups(sorted(self.vertices))]

    def component_count(self) -> int:
        return len(self.components)

    def is_connected(self) -> bool:
        return len(self.components) == 1


def _check_lengths(src: LanguageSource, n: int):
    if isinstance(src, FiniteWordSet) and src.min_length < n:
        raise ValueError(f"word set contains words shorter than the order {n}")


def build_letter_graph(src: LanguageSource, letter: str, n: int) -> LetterGraph:
    if n < 1:
        raise ValueError(f"graph order must be positive, got {n}")
    if (letter,) not in src.language(1):
        raise ValueError(f"unknown letter {letter!r}")
    _check_lengths(src, n)
    vertices = frozenset((i, u) for u in src.language(n) for i in range(n) if u[i] == letter)
    if not vertices:
        raise ValueError(f"letter {letter!r} occurs in no word of length {n}")
    edges = frozenset(
        frozenset({(i, w[:-1]), (i - 1, w[1:])})
        for w in src.language(n + 1)
        for i in range(1, n)
        if w[i] == letter
    )
    return LetterGraph(letter, n, vertices, edges)


def component_count(g: LetterGraph) -> int:
    return g.component_count()


def is_n_connected(src: LanguageSource, letter: str, n: int) -> bool:
    return build_letter_graph(src, letter, n).is_connected()


def disconnected_letters(src: LanguageSource, n: int) -> list:
    present = {w[0] for w in src.language(1)}
    return [a for a in src.alphabet if a in present and not is_n_connected(src, a, n)]


def is_maximal_preimage(src: LanguageSource, n: int) -> bool:
    """Whether ``src`` is the maximal ``n``-preimage of its own ``n``-block
    presentation, i.e. every letter is ``n``-connected."""
    if n < 1:
        raise ValueError(f"N must be positive, got {n}")
    return not disconnected_letters(src, n)


def block_source(src: LanguageSource, k: int):
    """The ``k``-block presentation of a word set or an SFT."""
    if isinstance(src, Sft):
        return block_present_sft(src, k)
    if isinstance(src, FiniteWordSet):
        return block_present(src, k)[0]
    raise TypeError(f"cannot block-present {type(src).__name__}")


def composability_witness(src: LanguageSource, k: int, n: int) -> Optional[str]:
    """The first block letter ``[w]``, ``w`` in ``L_k``, whose graph of order
    ``n - k + 1`` over the ``k``-block presentation is disconnected."""
    if not n > k >= 1:
        raise ValueError(f"need N > K >= 1, got K={k}, N={n}")
    blocked = block_source(src, k)
    for w in sorted(src.language(k)):
        if not is_n_connected(blocked, block_letter(w), n - k + 1):
            return block_letter(w)
    return None


def check_preimage_composability(src: LanguageSource, k: int, n: int) -> bool:
    """True when every ``[w]`` graph of order ``n - k + 1`` over the
    ``k``-block presentation is connected.  Then the ``k``-block
    presentation is the maximal ``(n - k + 1)``-preimage of the ``n``-block
    presentation, which is therefore itself a ``k``-block presentation."""
    return composability_witness(src, k, n) is None


def _quote(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _vertex_label(v) -> str:
    i, u = v
    return _quote(f"{i}:{' '.join(u)}")


def export_dot(g: LetterGraph) -> str:
    """Undirected DOT text; vertices sorted by layer then word."""
    name = _quote(g.letter)
    lines = [f'graph "G_{name}^{g.order}" {{']
    vertices = sorted(g.vertices)
    for i in range(g.order):
        layer = [v for v in vertices if v[0] == i]
        if not layer:
            continue
        lines.append(f"  subgraph layer{i} {{")
        lines.append("    rank=same;")
        for v in layer:
            lines.append(f'    "{_vertex_label(v)}";')
        lines.append("  }")
    for u, v in sorted(tuple(sorted(e)) for e in g.edges):
        lines.append(f'  "{_vertex_label(u)}" -- "{_vertex_label(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
