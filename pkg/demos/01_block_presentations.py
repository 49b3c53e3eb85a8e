"""Higher-block presentations of a word, and how to recognise one.

Run with ``python3 demos/01_block_presentations.py``.
"""

from pathlib import Path

from shiftblocks import (
    are_similar,
    block_present,
    equivalence_k,
    is_block_presentation,
    read_source,
)

DATA = Path(__file__).parent / "data"

V = read_source(DATA / "V.words")
print("V =", " ".join(V.words[0]))

# Each position is replaced by the block of length 3 starting there.
x3, coding = block_present(V, 3)
print(f"\nV^[3] has {len(x3.alphabet)} block letters:")
print(" ", " ".join(x3.words[0]))

# The file X.words holds the same word with the blocks renamed to digits.
X = read_source(DATA / "X.words")
sigma = are_similar(x3, X)
print("\nrenaming the blocks to digits:")
for block, digit in sigma.items():
    print(f"  {block} -> {digit}")

# Letters of a 2-block presentation are told apart by the relations k = 0, 1.
for k in (0, 1):
    part = equivalence_k(X, 2, k)
    print(f"\nclasses for k={k}:", "  ".join("{" + ",".join(sorted(c)) + "}" for c in part))

print("\nX is a 2-block presentation:", bool(is_block_presentation(X, 2)))

Y = read_source(DATA / "Y.words")
check = is_block_presentation(Y, 2)
print("Y is a 2-block presentation:", bool(check))
print("  letters never separated:", " and ".join(check.witness))
