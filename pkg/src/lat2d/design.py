"""Inverse design: rebuild root invariants and explicit bases from
projected invariants and a size, plus the linear structure on invariants."""

from __future__ import annotations

import math

from lat2d.errors import InconsistentSign, InvalidPI
from lat2d.geometry import Superbase, Vec2
from lat2d.invariants import (
    EPS_BOUNDARY,
    ProjectedInvariant,
    RootInvariant,
    is_mirror_symmetric,
)


def _check_pi(pi: ProjectedInvariant) -> ProjectedInvariant:
    x, y = pi
    if not (
        -EPS_BOUNDARY <= x < 1.0
        and -EPS_BOUNDARY <= y <= 1.0 + EPS_BOUNDARY
        and x + y <= 1.0 + EPS_BOUNDARY
    ):
        raise InvalidPI(f"({x}, {y}) lies outside the quotient triangle")
    return ProjectedInvariant(max(x, 0.0), min(max(y, 0.0), 1.0))


def ri_from_pi(pi: ProjectedInvariant, sigma: float) -> RootInvariant:
    """Unique root invariant with projected invariant pi and size sigma."""
    x, y = _check_pi(pi)
    if not sigma > 0.0:
        raise InvalidPI(f"size must be positive, got {sigma}")
    return RootInvariant(
        sigma / 3.0 * y,
        sigma / 6.0 * (3.0 - 3.0 * x - y),
        sigma / 6.0 * (3.0 + 3.0 * x - y),
    )


def superbase_from_ri(ri: RootInvariant, sgn: int = 0) -> Superbase:
    """Obtuse superbase realizing a root invariant, unique up to rigid motion.

    v1 sits on the positive x-axis; v2 goes to the upper half-plane for
    sgn >= 0 and to the lower one for sgn == -1. The requested sign must
    be 0 exactly when the invariant is mirror-symmetric.
    """
    if sgn not in (-1, 0, 1):
        raise InconsistentSign(f"sign must be -1, 0 or +1, got {sgn}")
    if (sgn == 0) != is_mirror_symmetric(ri):
        raise InconsistentSign(
            f"sign {sgn} is inconsistent with root invariant {tuple(ri)}"
        )
    sq12 = ri.r12 * ri.r12
    len1 = math.sqrt(sq12 + ri.r01 * ri.r01)
    len2 = math.sqrt(sq12 + ri.r02 * ri.r02)
    cos_a = max(-1.0, min(1.0, -sq12 / (len1 * len2)))
    sin_a = math.sqrt(max(0.0, 1.0 - cos_a * cos_a))
    if sgn == -1:
        sin_a = -sin_a
    v1 = Vec2(len1, 0.0)
    v2 = Vec2(len2 * cos_a, len2 * sin_a)
    return Superbase(Vec2(-v1.x - v2.x, -v1.y - v2.y), v1, v2)


def cell_area(ri: RootInvariant) -> float:
    """Area of the primitive unit cell of the lattice with this invariant."""
    a = ri.r12 * ri.r12
    b = ri.r01 * ri.r01
    c = ri.r02 * ri.r02
    return math.sqrt(a * b + a * c + b * c)


def reconstruction_angle_from_pi(pi: ProjectedInvariant) -> float:
    """Angle between the reduced basis vectors of any lattice with this
    projected invariant, in radians within [pi/2, pi)."""
    x, y = _check_pi(pi)
    base = 9.0 * x * x + 5.0 * y * y - 6.0 * y + 9.0
    radicand = base * base - 36.0 * x * x * (3.0 - y) ** 2
    denom = math.sqrt(max(0.0, radicand))
    if denom == 0.0:
        raise InvalidPI(f"angle is undefined at ({x}, {y})")
    ratio = max(-1.0, min(1.0, -4.0 * y * y / denom))
    return math.acos(ratio)


def lattice_mix(a: RootInvariant, b: RootInvariant, t: float) -> RootInvariant:
    """Convex combination t*a + (1-t)*b; the invariant cone is convex."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {t}")
    u = 1.0 - t
    return RootInvariant(
        t * a.r12 + u * b.r12, t * a.r01 + u * b.r01, t * a.r02 + u * b.r02
    )


def ri_dot(a: RootInvariant, b: RootInvariant) -> float:
    """Inner product of root invariants as vectors in R^3."""
    return a.r12 * b.r12 + a.r01 * b.r01 + a.r02 * b.r02
