"""
The numeric shadow: piecewise-linear loops in the punctured plane
=================================================================

The combinatorial side of the package cancels retraces exactly; this demo
shows the same identities surviving in floating point.  The circle-group
holonomy of the angular form is the line integral counting turns around the
puncture, and inserting an out-and-back detour changes it by nothing.
"""

import math
import random

import numpy as np

from pathgauge import numeric

# The endpoint-flattening bump: a smooth step that is flat to all orders at
# both ends, so concatenations of reparameterized paths stay smooth.
print("bump(0), bump(1):", numeric.bump(0.0), numeric.bump(1.0))
print("bump(1/2)       :", numeric.bump(0.5))
ts = np.linspace(0.0, 1.0, 10_001)
vals = numeric.bump(ts)
print("symmetry defect :", float(np.max(np.abs(vals + vals[::-1] - 1.0))))

# Straight segments and restrictions of polylines.
ell = numeric.radial_plot((0.0, 0.0), (1.0, 0.0))
print("\nradial midpoint :", ell.at(0.5))
zigzag = numeric.make_path(np.column_stack([ts[::100], np.sin(3 * np.pi * ts[::100])]))
middle = numeric.segment(zigzag, 0.2, 0.7)
print("segment samples :", middle.n)

# Winding about the origin: a square around the puncture integrates to 2*pi,
# a square far away to 0.
form = numeric.angular_form()
around = numeric.make_path([(1, -1), (1, 1), (-1, 1), (-1, -1), (1, -1)])
away = numeric.make_path([(3, -1), (5, -1), (5, 1), (3, 1), (3, -1)])
print("\nenclosing loop  :", numeric.u1_holonomy(form, around), "~", 2 * math.pi)
print("outside loop    :", numeric.u1_holonomy(form, away))
print("winding numbers :", numeric.winding_number(form, around), numeric.winding_number(form, away))

# Retrace invariance: pad a loop with a detour walked out and straight back.
rng = random.Random(0)
alpha = numeric.make_path([(2.0, 0.0), (1.5, 1.5), (0.0, 2.0)])
eta = numeric.make_path([(0.0, 2.0), (-2.0, 1.0)])
beta = numeric.make_path([(0.0, 2.0), (-1.5, -1.5), (2.0, 0.0)])
plain = numeric.concat_paths(alpha, beta)
padded = numeric.concat_paths(numeric.concat_paths(alpha, numeric.concat_paths(eta, eta.reverse())), beta)
defect = abs(numeric.u1_holonomy(form, padded) - numeric.u1_holonomy(form, plain))
print("\nretrace defect  :", defect)
