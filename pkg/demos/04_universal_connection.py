"""
The based-path bundle and its universal connection
==================================================

Points of the based-path bundle are reduced words out of the basepoint;
the projection reads off the endpoint.  The universal connection straightens
any path of such points: keep the point at the anchor index and extend it by
the base segment actually traversed.  Quotienting by a holonomy homomorphism
glues on a group fiber, and canonical forms make the quotient decidable.
"""

from pathgauge import (
    AssociatedPoint,
    FPath,
    canonicalize,
    fpoint,
    omega_action,
    universal_connection,
    universal_lift,
)
from pathgauge.instances import theta_complex, theta_holospec
from pathgauge.pathspace import associated_lift, twist
from pathgauge.words import empty_word

cx = theta_complex()
base = fpoint(empty_word("v0"))

# Loops act on based paths by walking the loop first; a retrace against the
# path cancels in the reduced word.
gamma_b = cx.word_from_literal("b,~a")
p = fpoint(cx.word_from_literal("a"))
print("action       :", omega_action(p, gamma_b).word)

# A path of based-path classes over base word b, with a deliberately crooked
# second point; straightening at index 0 replaces it by [b].
crooked = FPath(
    cx.word_from_literal("b"),
    (base, fpoint(cx.word_from_literal("c"))),
)
straight = universal_connection(crooked, 0)
print("straightened :", [str(q.word) for q in straight.points])

# The horizontal lift of a loop ends at the loop's own class: lifting is
# literally "remember the path you walked".
lifted = universal_lift(gamma_b, 0, base)
print("lift of loop :", [str(q.word) for q in lifted.points])

# Associated bundle: pair words with group elements and quotient by the
# twisted loop action.  Canonical forms decide equality of classes.
spec = theta_holospec()  # b -> 2, c -> 1 in the integers mod 5
ap = AssociatedPoint(cx.word_from_literal("b"), 1)
print("\ncanonical form of [b],1 :", canonicalize(ap, spec))

# Twisting by any loop moves the representative but never the class.
moved = twist(spec, ap, gamma_b)
print("twisted representative  :", (str(moved.word), moved.g))
print("same canonical form     :", canonicalize(moved, spec) == canonicalize(ap, spec))

# Lifting in the associated bundle carries the fiber element along unchanged;
# around a full loop the canonical fiber picks up exactly the holonomy.
ride = associated_lift(gamma_b, 0, AssociatedPoint(empty_word("v0"), 0))
print("\nassociated lift endpoint:", canonicalize(ride.points[-1], spec))
