"""
Gauge fields, parallel transport, and holonomy
==============================================

A gauge field labels every edge with a group element.  Walking a word
multiplies the labels up (later steps on the left, reverse steps contribute
inverses), lifts ride those products through the fibers, and loops at the
basepoint report their fiber displacement: the holonomy.
"""

from pathgauge import (
    BundlePoint,
    EPath,
    GaugeField,
    holonomy_group,
    holonomy_rep,
    horizontal_lift,
    project_horizontal,
    transport,
)
from pathgauge.groups import CyclicCtx, PermutationCtx
from pathgauge.instances import theta_complex, wedge_complex

cx = theta_complex()
field = GaugeField(cx, CyclicCtx(5), {"a": 0, "b": 2, "c": 1})

# Transport along a loop through b and back down a: 2 (mod 5).
gamma_b = cx.word_from_literal("b,~a")
print("transport along", gamma_b, "->", transport(field, gamma_b))

# Lifting b starting from fiber 0 lands on fiber 2 over v1.
lift = horizontal_lift(field, cx.word_from_literal("b"), 0, BundlePoint("v0", 0))
print("lift of b      :", lift.fibers)

# Lifts can start anywhere along the word, including at the far end.
backwards = horizontal_lift(field, gamma_b, 2, BundlePoint("v0", 0))
print("lift from end  :", backwards.fibers)

# A path with the wrong fibers gets straightened by horizontal projection;
# projecting twice changes nothing.
crooked = EPath(cx.word_from_literal("b"), (0, 4))
straight = project_horizontal(field, crooked, 0)
print("projected      :", straight.fibers)
print("idempotent     :", project_horizontal(field, straight, 0) == straight)

# Holonomy at the marked point, and the group all loops generate together.
xi0 = BundlePoint("v0", 0)
print("\nholonomy of", gamma_b, ":", holonomy_rep(field, xi0, gamma_b))
print("holonomy group:", sorted(holonomy_group(field, xi0)))

# A nonabelian example: two self-loops carrying a transposition and a
# 3-cycle generate all six permutations of three letters.
wedge = wedge_complex()
s3 = PermutationCtx(3)
wfield = GaugeField(wedge, s3, {"p": (1, 0, 2), "q": (1, 2, 0)})
group = holonomy_group(wfield, BundlePoint("v0", s3.identity()))
print("\nwedge holonomy group size:", len(group))
