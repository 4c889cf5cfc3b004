"""Crystal graphs, branching to G2 and A2, tensor products and export.

Writes b2.dot in the current directory; render with `dot -Tsvg b2.dot`.
"""
from crystal_kit import G2Crystal, HatD4Crystal, build_graph, decompose, export_dot, tensor
from crystal_kit.graph import is_connected

g = build_graph(G2Crystal(2))
print(f"B_2: {len(g.nodes)} nodes, {len(g.edges)} arrows")

# Forget the 0-arrows: one G2 component per k <= l with highest element (k,0,0,0,0,0).
print(decompose(g, {1, 2}).to_table())
print()
# Forget the 2-arrows: A2 components.
print(decompose(g, {0, 1}).to_table())
print()
# The D4^(3) crystal branches the other way round.
print(decompose(build_graph(HatD4Crystal(3)), {0, 1}).to_table())

b1 = build_graph(G2Crystal(1))
t = tensor(b1, b1)
print(f"\nB_1 (x) B_1: {len(t.nodes)} nodes, connected = {is_connected(t)}")

with open("b2.dot", "w") as fh:
    fh.write(export_dot(g))
