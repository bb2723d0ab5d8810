"""Distances between lattices up to isometry, rigid motion and similarity.

Unoriented distances are Minkowski norms between (projected) root
invariants. The orientation-aware variants route between opposite-sign
lattices through the nearest mirror-symmetric one; for q in {2, inf} this
has closed forms, otherwise a golden-section search over the boundary of
the invariant cone evaluates the infimum numerically.

Two superbase-level distances support continuity analysis: the cyclic
coform distance and the superbase isometry metric (minimum over rotations,
optionally reflections, of the largest vector gap).
"""

from __future__ import annotations

import math
from typing import Callable

from lat2d import backend
from lat2d.errors import UnsupportedQ
from lat2d.geometry import Superbase, Vec2, cross, dot, norm_sq, reflect_x
from lat2d.invariants import (
    OrientedProjectedInvariant,
    OrientedRootInvariant,
    ProjectedInvariant,
    RootInvariant,
    obtuse_conorms,
)

INF = math.inf

# Rotation search used by superbase_isometry_metric.
SIM_N_GRID = 720
SIM_REFINE_ITERS = 60

# Interval tolerance of the golden-section fallbacks (relative to the range).
GOLDEN_TOL = 1e-8
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _check_q(q: float) -> float:
    if not (q >= 1.0):
        raise UnsupportedQ(f"Minkowski parameter must satisfy q >= 1, got {q}")
    return q


def minkowski_norm(values: tuple[float, ...], q: float) -> float:
    """Minkowski q-norm of a coordinate difference; q = inf gives the max."""
    _check_q(q)
    if q == INF:
        return max(abs(v) for v in values)
    if q == 2.0:
        return math.sqrt(math.fsum(v * v for v in values))
    if q == 1.0:
        return math.fsum(abs(v) for v in values)
    return math.fsum(abs(v) ** q for v in values) ** (1.0 / q)


def max_sum_moduli(a: float, b: float, c: float, d: float) -> float:
    """min over x >= 0 of max(|a-x| + |x-b|, |c-x| + |x-d|):
    equals max(|a-b|, |c-d|, |a+b-c-d| / 2)."""
    return max(abs(a - b), abs(c - d), 0.5 * abs(a + b - c - d))


def root_metric(r: RootInvariant, s: RootInvariant, q: float) -> float:
    """Minkowski distance between root invariants (isometry classes)."""
    return minkowski_norm((r.r12 - s.r12, r.r01 - s.r01, r.r02 - s.r02), q)


def projected_metric(p: ProjectedInvariant, r: ProjectedInvariant, q: float) -> float:
    """Minkowski distance between projected invariants (similarity classes)."""
    return minkowski_norm((p.x - r.x, p.y - r.y), q)


def _golden_min(f: Callable[[float], float], lo: float, hi: float) -> float:
    """Minimum value of a unimodal f on [lo, hi]."""
    if hi <= lo:
        return f(lo)
    tol = GOLDEN_TOL * max(1.0, hi - lo)
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    best = min(f(lo), f(hi), f1, f2)
    for _ in range(128):
        if f1 <= f2:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
        if hi - lo < tol:
            break
    return min(best, f1, f2)


def minimize_over_cone_boundary(
    g: Callable[[float, float, float], float], hi: float
) -> float:
    """Minimum of g over the boundary of the cone 0 <= t12 <= t01 <= t02 <= hi.

    The three boundary sheets (t12 = 0, t12 = t01, t01 = t02) carry the
    invariants of mirror-symmetric lattices. g must be convex.
    """

    def floor_sheet(u: float) -> float:
        return _golden_min(lambda v: g(0.0, u, v), u, hi)

    def low_tie(u: float) -> float:
        return _golden_min(lambda v: g(u, u, v), u, hi)

    def high_tie(u: float) -> float:
        return _golden_min(lambda v: g(v, u, u), 0.0, u)

    return min(
        _golden_min(floor_sheet, 0.0, hi),
        _golden_min(low_tie, 0.0, hi),
        _golden_min(high_tie, 0.0, hi),
    )


def minimize_over_triangle_boundary(g: Callable[[float, float], float]) -> float:
    """Minimum of a convex g over the boundary of the quotient triangle."""
    return min(
        _golden_min(lambda t: g(0.0, t), 0.0, 1.0),
        _golden_min(lambda t: g(t, 0.0), 0.0, 1.0),
        _golden_min(lambda t: g(t, 1.0 - t), 0.0, 1.0),
    )


def oriented_root_metric(
    a: OrientedRootInvariant, b: OrientedRootInvariant, q: float
) -> float:
    """Root metric separating mirror images (rigid-motion classes).

    For non-opposite signs this is the plain root metric. For opposite
    signs it is the cheapest detour through a mirror-symmetric lattice,
    min over invariants t on the cone boundary of |r - t|_q + |s - t|_q:
    closed forms for q in {2, inf}, numeric minimization otherwise.
    """
    _check_q(q)
    if a.sign * b.sign >= 0:
        return root_metric(a.ri, b.ri, q)
    r, s = a.ri, b.ri
    if q == 2.0:
        reflections = (
            (-s.r12, s.r01, s.r02),
            (s.r01, s.r12, s.r02),
            (s.r12, s.r02, s.r01),
        )
        return min(
            math.sqrt(
                (r.r12 - m0) ** 2 + (r.r01 - m1) ** 2 + (r.r02 - m2) ** 2
            )
            for m0, m1, m2 in reflections
        )
    if q == INF:
        # Exact two-leg detour costs through the three boundary sheets.
        # On a sheet that ties two coordinates to a common value x, the
        # legs pay half-gap + |x - midpoint| each, minimized over x; the
        # untied coordinate contributes its plain difference.
        d0 = max(r.r12 + s.r12, abs(r.r01 - s.r01), abs(r.r02 - s.r02))
        d1 = max(
            0.5 * (r.r01 - r.r12)
            + 0.5 * (s.r01 - s.r12)
            + 0.5 * abs((r.r12 + r.r01) - (s.r12 + s.r01)),
            abs(r.r02 - s.r02),
        )
        d2 = max(
            abs(r.r12 - s.r12),
            0.5 * (r.r02 - r.r01)
            + 0.5 * (s.r02 - s.r01)
            + 0.5 * abs((r.r01 + r.r02) - (s.r01 + s.r02)),
        )
        return min(d0, d1, d2)
    hi = 1.25 * max(r.r02, s.r02)
    return minimize_over_cone_boundary(
        lambda t12, t01, t02: minkowski_norm(
            (r.r12 - t12, r.r01 - t01, r.r02 - t02), q
        )
        + minkowski_norm((s.r12 - t12, s.r01 - t01, s.r02 - t02), q),
        hi,
    )


def oriented_projected_metric(
    a: OrientedProjectedInvariant, b: OrientedProjectedInvariant, q: float
) -> float:
    """Projected metric separating mirror images (oriented similarity)."""
    _check_q(q)
    if a.sign * b.sign >= 0:
        return projected_metric(a.pi, b.pi, q)
    p1, p2 = a.pi, b.pi
    if q == 2.0:
        reflections = ((-p2.x, p2.y), (p2.x, -p2.y), (1.0 - p2.y, 1.0 - p2.x))
        return min(
            math.hypot(p1.x - mx, p1.y - my) for mx, my in reflections
        )
    if q == INF:
        x1, y1 = p1
        x2, y2 = p2
        d_x = max(abs(x2 - x1), y2 + y1)
        d_y = max(x2 + x1, abs(y2 - y1))
        # Hypotenuse detour: both coordinates are tied through the wall
        # point (c, 1 - c); each leg pays its distance-to-wall plus the
        # shift |c - midpoint|, minimized over c.
        d_xy = (
            0.5 * (1.0 - x1 - y1)
            + 0.5 * (1.0 - x2 - y2)
            + 0.5 * abs((x1 - y1) - (x2 - y2))
        )
        return min(d_x, d_y, d_xy)
    return minimize_over_triangle_boundary(
        lambda tx, ty: minkowski_norm((p1.x - tx, p1.y - ty), q)
        + minkowski_norm((p2.x - tx, p2.y - ty), q)
    )


def coform_cyclic_metric(s1: Superbase, s2: Superbase) -> float:
    """min over the three cyclic conorm alignments of the largest conorm gap."""
    p = obtuse_conorms(s1)
    r = obtuse_conorms(s2)
    best = INF
    for shift in range(3):
        worst = max(abs(p[i] - r[(i + shift) % 3]) for i in range(3))
        if worst < best:
            best = worst
    return best


def superbase_isometry_metric(
    s1: Superbase, s2: Superbase, oriented: bool = False
) -> float:
    """Minimum over isometries f (rotations only when oriented) and cyclic
    vector orders of max_i |f(u_i) - v_i| for superbases u, v.

    Numeric: a coarse scan over SIM_N_GRID rotation angles followed by
    golden-section refinement; the result is accurate to about 1e-8 times
    the vector scale.
    """
    obtuse_conorms(s1)
    obtuse_conorms(s2)
    vs = (s1.v0, s1.v1, s1.v2)
    us = (s2.v0, s2.v1, s2.v2)
    best = INF
    variants = (False,) if oriented else (False, True)
    for reflected in variants:
        base = tuple(reflect_x(u) for u in us) if reflected else us
        for shift in range(3):
            params = []
            for i in range(3):
                u = base[(i + shift) % 3]
                v = vs[i]
                params.extend((norm_sq(u) + norm_sq(v), dot(u, v), cross(u, v)))
            gap = backend.min_rotation_gap(*params, SIM_N_GRID, SIM_REFINE_ITERS)
            if gap < best:
                best = gap
    return best
