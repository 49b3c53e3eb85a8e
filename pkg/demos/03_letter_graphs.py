"""Letter graphs and what their components count.

A letter with several components in its graph of order N splits into that
many letters in the maximal N-preimage.
"""

from pathlib import Path

from shiftblocks import (
    block_present,
    build_letter_graph,
    composability_witness,
    export_dot,
    is_maximal_preimage,
    read_source,
)

DATA = Path(__file__).parent / "data"
V = read_source(DATA / "V.words")

g = build_letter_graph(V, "a", 3)
print(f"graph of a in V, order 3: {len(g.vertices)} vertices, {len(g.edges)} edges,"
      f" {g.component_count()} component")
print(export_dot(g))

print("V is a maximal 3-preimage:", is_maximal_preimage(V, 3))

V2, _ = block_present(V, 2)
h = build_letter_graph(V2, "[b,e]", 2)
print("\ngraph of [b,e] in V^[2], order 2:")
for comp in h.components:
    print("  component:", ", ".join(f"{i}:{' '.join(u)}" for i, u in sorted(comp)))

# This disconnected graph is why the maximal 2-preimage of V^[3] is not
# a 2-block presentation.
print("\nfirst disconnected block letter:", composability_witness(V, 2, 3))
