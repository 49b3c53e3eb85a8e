"""The higher-block code and block presentations of finite word sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .words import FiniteWordSet, Word, factors


def block_letter(block: Word) -> str:
    """Canonical token for the block letter ``[w]``, e.g. ``[b,a,b]``."""
    return "[" + ",".join(block) + "]"


@dataclass(frozen=True)
class BlockCoding:
    """Bijection between the N-words of a source and their block letters."""

    order: int
    letters: Mapping  # Word -> block letter token

    def __post_init__(self):
        if any(len(w) != self.order for w in self.letters):
            raise ValueError("every coded block must have length equal to the order")
        if len(set(self.letters.values())) != len(self.letters):
            raise ValueError("block coding is not injective")

    @classmethod
    def for_blocks(cls, order: int, blocks) -> "BlockCoding":
        return cls(order, {b: block_letter(b) for b in blocks})

    def __getitem__(self, block: Word) -> str:
        return self.letters[block]

    def blocks(self) -> dict:
        """Inverse table: block letter token -> block."""
        return {t: w for w, t in self.letters.items()}

    def encode(self, word: Word) -> Word:
        return tuple(self.letters[f] for f in factors(word, self.order))

    def decode(self, word: Word) -> Word:
        inv = self.blocks()
        blocks = [inv[t] for t in word]
        return tuple(b[0] for b in blocks) + blocks[-1][1:]


def higher_block_word(w: Word, n: int) -> Word:
    """Replace each position of ``w`` by the length-``n`` block starting there."""
    if n < 1:
        raise ValueError(f"block order must be positive, got {n}")
    if len(w) < n:
        raise ValueError(f"word of length {len(w)} is shorter than the block order {n}")
    return tuple(block_letter(f) for f in factors(tuple(w), n))


def block_present(ws: FiniteWordSet, n: int) -> tuple:
    """The ``n``-block presentation of ``ws`` and the coding used for it."""
    if n < 1:
        raise ValueError(f"block order must be positive, got {n}")
    short = [w for w in ws.words if len(w) < n]
    if short:
        raise ValueError(f"word set contains words shorter than {n}: {' '.join(short[0])}")
    coding = BlockCoding.for_blocks(n, sorted(ws.language(n)))
    return FiniteWordSet(coding.encode(w) for w in ws.words), coding
