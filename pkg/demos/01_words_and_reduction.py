"""
Edge words and retrace reduction
================================

A walk on a graph is a word of directed edge steps.  Walking an edge and
immediately walking back is invisible to everything downstream (transport,
holonomy), and free reduction computes the canonical word with no such
out-and-back left.
"""

from pathgauge import concat, loop_id, loop_inv, loop_mul, reduce_word, reverse_word, subword
from pathgauge.instances import theta_complex

# The theta graph: two vertices v0, v1 and three parallel edges a, b, c.
cx = theta_complex()
print("vertices:", cx.vertices)
print("edges:   ", [(e.id, e.src, e.dst) for e in cx.edges])

# Words are written as comma-separated steps; ~e walks edge e backwards.
w = cx.word_from_literal("b,~a,a,~c")
print("\nword     :", w, "  from", w.src, "to", w.dst)

# The middle pair ~a,a cancels; the class of the word survives reduction.
print("reduced  :", reduce_word(w))

# Concatenation traverses the left word first and is deliberately not
# auto-reduced, so representatives and classes stay distinguishable.
left = cx.word_from_literal("b")
right = cx.word_from_literal("~b,c")
print("\nconcat   :", concat(left, right))
print("reduced  :", reduce_word(concat(left, right)))

# Reversal flips every step and runs the word backwards.
print("reverse  :", reverse_word(cx.word_from_literal("b,~a")))

# subword(w, r, s) is the stretch between positions r and s; when s < r it
# comes out reversed, which is what horizontal lifts use to move backwards.
w = cx.word_from_literal("b,~a,c")
print("\nsubword 0..2 :", subword(w, 0, 2))
print("subword 3..1 :", subword(w, 3, 1))

# Reduced loops at the basepoint form a group: multiply (right factor walks
# first), invert, and the empty word is the identity.
gamma_b = cx.word_from_literal("b,~a")
gamma_c = cx.word_from_literal("c,~a")
print("\nloop product  :", loop_mul(gamma_b, gamma_c))
print("inverse       :", loop_inv(gamma_b))
print("gamma * gamma^-1 :", loop_mul(gamma_b, loop_inv(gamma_b)), "== ", loop_id("v0"))
