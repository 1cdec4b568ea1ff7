"""
Spanning trees, canonical paths, and chord loops
================================================

A spanning tree pins down one canonical path from the basepoint to every
vertex.  Each edge left out of the tree (a chord) closes up into a based
loop, and those loops freely generate every based loop of the graph.
"""

from pathgauge import build_tree, chord_loops, factor_loop, radial_paths, tree_path
from pathgauge.instances import theta_complex, wedge_complex
from pathgauge.words import loop_id, loop_inv, loop_mul, reduce_word

cx = theta_complex()
tree = build_tree(cx)
print("tree edges:", sorted(tree.tree_edges))
print("chords    :", tree.chords())

# Canonical tree paths, one per vertex; the basepoint gets the empty word.
for v in cx.vertices:
    print(f"tree path to {v}:", tree_path(tree, v))

# Chord loops: out along the tree, across the chord, back along the tree.
loops = chord_loops(cx, tree)
for chord, loop in loops.items():
    print(f"chord {chord} -> loop {loop}")

# Every based loop factors over the chords it crosses, in traversal order.
gamma = cx.word_from_literal("c,~b,a,~c")
occurrences = factor_loop(tree, gamma)
print("\nloop     :", gamma)
print("factors  :", occurrences)

rebuilt = loop_id(cx.basepoint)
for chord, sign in occurrences:
    piece = loops[chord] if sign == 1 else loop_inv(loops[chord])
    rebuilt = loop_mul(piece, rebuilt)
print("recombined:", rebuilt, "  equals reduced original:", rebuilt == reduce_word(gamma))

# Shortest-path families work from any origin, not just the basepoint.
print("\nradial words from v1:", {v: str(w) for v, w in radial_paths(cx, "v1").items()})

# The wedge of two self-loops has an empty tree: every edge is a chord.
wedge = wedge_complex()
print("\nwedge tree edges:", sorted(build_tree(wedge).tree_edges))
print("wedge chord loops:", {c: str(l) for c, l in chord_loops(wedge, build_tree(wedge)).items()})
