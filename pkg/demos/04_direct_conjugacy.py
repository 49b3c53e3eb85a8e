"""Deciding direct conjugacy of shifts of finite type.

The decision compares language counts and walks them up on the smaller
side until they match, overshoot or stall.
"""

from pathlib import Path

from shiftblocks import decide_direct_conjugacy, language_size, minimal_forbidden_words, read_source

DATA = Path(__file__).parent / "data"
golden = read_source(DATA / "golden_mean.sft")
golden2 = read_source(DATA / "golden_mean2.sft")
full = read_source(DATA / "full2.sft")
fixed = read_source(DATA / "fixed_points.sft")

print("golden mean language sizes:", [language_size(golden, n) for n in range(1, 9)])
print("minimal forbidden words of its 2-blocks:",
      sorted(" ".join(w) for w in minimal_forbidden_words(golden2)))


def show(name, x, y):
    d = decide_direct_conjugacy(x, y)
    if d.conjugate:
        print(f"\n{name}: conjugate with M={d.m}, N={d.n}")
        for a, b in d.witness.items():
            print(f"  {a} -> {b}")
    else:
        print(f"\n{name}: not conjugate ({d.reason})")
    print(f"  case {d.case}, {d.count_computations} count computation(s)")


show("golden mean vs its 2-blocks", golden, golden2)
show("golden mean vs full 2-shift", golden, full)
show("two fixed points vs golden 2-blocks", fixed, golden2)
