"""Undoing a block presentation: the maximal 2-preimage of X.

The maximal preimage is built from the class tuples of the two partitions.
For X it is itself not a 2-block presentation, even though X is a
3-block presentation of V.
"""

from pathlib import Path

from shiftblocks import (
    block_present,
    is_block_presentation,
    max_preimage,
    projection_to_preimage,
    read_source,
)

DATA = Path(__file__).parent / "data"
V = read_source(DATA / "V.words")
X = read_source(DATA / "X.words")

mp = max_preimage(X, 2)
print("maximal 2-preimage of X:", " ".join(mp.word_set.words[0]))
for line in mp.letter_table():
    print(" ", line)

# Every other 2-preimage is a letter-to-letter image of the maximal one.
V2, _ = block_present(V, 2)
psi = projection_to_preimage(mp, V2)
print("\nprojection onto V^[2]:")
for c, block in psi.items():
    print(f"  {c} -> {block}")

check = is_block_presentation(mp.word_set, 2)
print("\nis the preimage a 2-block presentation?", bool(check))
if not check:
    print("  no: letters", " and ".join(check.witness), "share a class in both partitions")
