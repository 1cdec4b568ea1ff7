"""Piecewise-linear paths in the plane: the continuous sanity check.

The combinatorial machinery in the rest of the package is exact; this module
mirrors its key identities numerically.  Paths are uniformly parameterized
polylines, the endpoint-flattening bump reparameterizes without moving the
image, `segment` restricts and reverses, and the circle-group holonomy of a
closed 1-form is a line integral: exact per-segment antiderivatives for the
angular and constant forms, adaptive Simpson for anything else.  Retrace
insertions cancel in the integral, which is the numerical shadow of the
exact cancellation the word model gets for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, EndpointMismatch, NotClosed, SingularityTooClose

CLOSURE_TOL = 1e-12
SINGULAR_MARGIN = 1e-6
SIMPSON_TARGET = 1e-10


def bump(t):
    """Smooth step: 0 at 0, 1 at 1, monotone, flat to all orders at both ends.

    f(t) = g(t) / (g(t) + g(1-t)) with g(t) = exp(-1/t) for t > 0, else 0.
    Accepts a scalar or an array; rejects arguments outside [0, 1].
    """
    arr = np.asarray(t, dtype=float)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise DomainError("bump is defined on [0, 1]")
    with np.errstate(divide="ignore", over="ignore"):
        g = np.where(arr > 0.0, np.exp(-1.0 / np.where(arr > 0.0, arr, 1.0)), 0.0)
        h = np.where(arr < 1.0, np.exp(-1.0 / np.where(arr < 1.0, 1.0 - arr, 1.0)), 0.0)
    out = g / (g + h)
    return float(out) if np.isscalar(t) or getattr(t, "ndim", 1) == 0 else out


@dataclass(frozen=True, eq=False)
class PLPath:
    """Polyline in the plane, uniformly parameterized on [0, 1]."""

    samples: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.samples, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 2 or arr.shape[1] != 2:
            raise DomainError("a path needs at least 2 planar samples")
        object.__setattr__(self, "samples", arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLPath):
            return NotImplemented
        return self.samples.shape == other.samples.shape and bool(
            np.array_equal(self.samples, other.samples)
        )

    @property
    def n(self) -> int:
        return self.samples.shape[0]

    def at(self, t):
        """Exact piecewise-linear evaluation at parameter(s) t in [0, 1].

        Parameters within 1e-9 of a knot snap onto it, so knot-aligned
        evaluation reproduces stored samples bit for bit.
        """
        ts = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(ts < -1e-15) or np.any(ts > 1 + 1e-15):
            raise DomainError("path parameter outside [0, 1]")
        ts = np.clip(ts, 0.0, 1.0)
        scaled = ts * (self.n - 1)
        nearest = np.rint(scaled)
        scaled = np.where(np.abs(scaled - nearest) < 1e-9, nearest, scaled)
        idx = np.minimum(scaled.astype(int), self.n - 2)
        frac = (scaled - idx)[:, None]
        pts = (1.0 - frac) * self.samples[idx] + frac * self.samples[idx + 1]
        return pts[0] if np.isscalar(t) else pts

    def reverse(self) -> PLPath:
        return PLPath(self.samples[::-1].copy())

    def start(self) -> np.ndarray:
        return self.samples[0]

    def end(self) -> np.ndarray:
        return self.samples[-1]


def make_path(points) -> PLPath:
    return PLPath(np.asarray(points, dtype=float))


def resample(path: PLPath, n: int) -> PLPath:
    if n < 2:
        raise DomainError("resampling needs at least 2 samples")
    return PLPath(path.at(np.linspace(0.0, 1.0, n)))


def paths_close(a: PLPath, b: PLPath, tol: float = 1e-9) -> bool:
    """Parameterization-independent comparison on a common grid."""
    n = max(a.n, b.n)
    return bool(np.max(np.abs(resample(a, n).samples - resample(b, n).samples)) <= tol)


def segment(path: PLPath, r: float, s: float) -> PLPath:
    """Restriction of `path` between parameters r and s, reversed when s < r.

    The output keeps the knot density of the input (sample count proportional
    to |s - r|), so knot-aligned restrictions are exact.  segment(path, r, r)
    is the constant path at path(r).
    """
    if not (0.0 <= r <= 1.0 and 0.0 <= s <= 1.0):
        raise DomainError("segment parameters must lie in [0, 1]")
    count = max(2, int(round(abs(s - r) * (path.n - 1))) + 1)
    params = np.linspace(r, s, count)
    return PLPath(path.at(params))


def radial_plot(r0, r1, n: int = 2) -> PLPath:
    """Straight segment t -> (1 - t) r0 + t r1."""
    r0 = np.asarray(r0, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    ts = np.linspace(0.0, 1.0, max(n, 2))[:, None]
    return PLPath((1.0 - ts) * r0 + ts * r1)


def concat_paths(first: PLPath, second: PLPath) -> PLPath:
    if not np.allclose(second.start(), first.end(), atol=CLOSURE_TOL, rtol=0.0):
        raise EndpointMismatch("paths do not meet: cannot concatenate")
    return PLPath(np.vstack([first.samples, second.samples[1:]]))


@dataclass(frozen=True)
class OneForm:
    """A closed 1-form on the punctured plane.

    kind "angular": (x dy - y dx) / (x^2 + y^2) about `center` (one singular
    point, total 2*pi per winding).  kind "constant": c dx + d dy.  kind
    "custom": arbitrary evaluator (x, y) -> (P, Q), integrated by adaptive
    Simpson; singular points may be declared for the safety margin.
    """

    kind: str
    center: tuple[float, float] = (0.0, 0.0)
    coeffs: tuple[float, float] = (0.0, 0.0)
    evaluator: Callable[[float, float], tuple[float, float]] | None = None
    singular: tuple[tuple[float, float], ...] = ()

    def singular_points(self) -> tuple[tuple[float, float], ...]:
        if self.kind == "angular":
            return (self.center,)
        return self.singular


def angular_form(center=(0.0, 0.0)) -> OneForm:
    return OneForm("angular", center=(float(center[0]), float(center[1])))


def constant_form(c: float, d: float) -> OneForm:
    return OneForm("constant", coeffs=(float(c), float(d)))


def custom_form(evaluator, singular=()) -> OneForm:
    return OneForm(
        "custom",
        evaluator=evaluator,
        singular=tuple((float(x), float(y)) for x, y in singular),
    )


def _point_segment_distance(p: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.hypot(*(p - a)))
    t = float(np.clip((p - a) @ ab / denom, 0.0, 1.0))
    closest = a + t * ab
    return float(np.hypot(*(p - closest)))


def _adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
        return left + right + (left + right - whole) / 15.0
    return _adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + _adaptive_simpson(
        f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1
    )


def _segment_integral(form: OneForm, a: np.ndarray, b: np.ndarray) -> float:
    if form.kind == "constant":
        c, d = form.coeffs
        return c * (b[0] - a[0]) + d * (b[1] - a[1])
    if form.kind == "angular":
        cx, cy = form.center
        ax, ay = a[0] - cx, a[1] - cy
        bx, by = b[0] - cx, b[1] - cy
        # Angle swept by a straight segment that misses the puncture is the
        # principal angle between the endpoint rays; always below pi.
        return math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    assert form.evaluator is not None
    direction = b - a

    def integrand(t: float) -> float:
        x, y = a + t * direction
        p, q = form.evaluator(x, y)
        return p * direction[0] + q * direction[1]

    fa, fm, fb = integrand(0.0), integrand(0.5), integrand(1.0)
    whole = (fa + 4.0 * fm + fb) / 6.0
    return _adaptive_simpson(integrand, 0.0, 1.0, fa, fm, fb, whole, SIMPSON_TARGET, 48)


def u1_holonomy(form: OneForm, loop: PLPath, mod_two_pi: bool = False) -> float:
    """Line integral of a closed 1-form around a closed polyline.

    The value is the additive angle of the circle-group holonomy; for the
    angular form it is 2*pi times the winding number about the puncture.
    Raises NotClosed when the endpoints do not meet within 1e-12, and
    SingularityTooClose when any segment passes within 1e-6 of a singular
    point (reject rather than return noise).
    """
    if not np.allclose(loop.start(), loop.end(), atol=CLOSURE_TOL, rtol=0.0):
        raise NotClosed("path endpoints do not meet; no loop to integrate around")
    pts = loop.samples
    singular = [np.asarray(p, dtype=float) for p in form.singular_points()]
    for i in range(len(pts) - 1):
        for p in singular:
            if _point_segment_distance(p, pts[i], pts[i + 1]) < SINGULAR_MARGIN:
                raise SingularityTooClose(
                    f"segment {i} passes within {SINGULAR_MARGIN} of singular point {tuple(p)}"
                )
    total = 0.0
    for i in range(len(pts) - 1):
        total += _segment_integral(form, pts[i], pts[i + 1])
    if mod_two_pi:
        total = math.remainder(total, 2.0 * math.pi)
    return total


def winding_number(form: OneForm, loop: PLPath) -> int:
    """Integer winding of a loop about the puncture of an angular form."""
    if form.kind != "angular":
        raise DomainError("winding numbers need an angular form")
    return round(u1_holonomy(form, loop) / (2.0 * math.pi))
