"""
The interlacing graph for degree 4 and q = 4
============================================

Vertices are the 15 representative sequences; k-cliques are rotational sets
made of k orbits.
"""
# %%
from rotsets import RotationNumber, build_graph, enumerate_sets

g = build_graph(4, RotationNumber.of(1, 4))
print(len(g.vertices), "vertices,", len(g.edges), "edges")
print({k: len(c) for k, c in g.cliques_by_size.items()})

# %%
for u, v in g.sorted_edges()[:6]:
    print(g.vertices[u].label(), "--", g.vertices[v].label())

# %%
# One of the 16 three-orbit sets, as fractions over 255.
first = next(enumerate_sets(4, RotationNumber.of(1, 4), 3))
print([int(t * 255) for t in first.angles], first.raw_shift)
