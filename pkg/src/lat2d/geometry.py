"""Exact 2D vector and superbase arithmetic, conorms, vonorms, reduction.

A superbase (v0, v1, v2) with v0 + v1 + v2 = 0 is obtuse when all three
conorms p_ij = -v_i . v_j are non-negative. Every planar lattice has one,
and reduce_to_obtuse finds it from an arbitrary basis.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from lat2d import backend
from lat2d.errors import DegenerateBasis, NonTermination

# Relative tolerance for treating a conorm as zero (rectangular case).
EPS_ZERO_REL = 1e-9
# Normalized determinant threshold below which a basis is degenerate.
EPS_DEGENERATE = 1e-12
# Relative tolerance on conorm/vonorm consistency checks.
EPS_CONSISTENCY = 1e-9


class Vec2(NamedTuple):
    x: float
    y: float


class Basis(NamedTuple):
    v1: Vec2
    v2: Vec2


class Superbase(NamedTuple):
    v0: Vec2
    v1: Vec2
    v2: Vec2


class Conorms(NamedTuple):
    """Negated pairwise scalar products of superbase vectors (length^2)."""

    p12: float
    p01: float
    p02: float


class Vonorms(NamedTuple):
    """Squared lengths of the superbase vectors (length^2)."""

    vn0: float
    vn1: float
    vn2: float


def dot(u: Vec2, v: Vec2) -> float:
    return u.x * v.x + u.y * v.y


def cross(u: Vec2, v: Vec2) -> float:
    """Signed area spanned by (u, v); positive when v is counter-clockwise from u."""
    return u.x * v.y - u.y * v.x


def norm_sq(v: Vec2) -> float:
    return v.x * v.x + v.y * v.y


def norm(v: Vec2) -> float:
    return math.hypot(v.x, v.y)


def add(u: Vec2, v: Vec2) -> Vec2:
    return Vec2(u.x + v.x, u.y + v.y)


def neg(v: Vec2) -> Vec2:
    return Vec2(-v.x, -v.y)


def scale(v: Vec2, s: float) -> Vec2:
    return Vec2(s * v.x, s * v.y)


def rotate(v: Vec2, angle: float) -> Vec2:
    c = math.cos(angle)
    s = math.sin(angle)
    return Vec2(c * v.x - s * v.y, s * v.x + c * v.y)


def reflect_x(v: Vec2) -> Vec2:
    return Vec2(v.x, -v.y)


def is_degenerate(b: Basis) -> bool:
    return abs(cross(b.v1, b.v2)) <= EPS_DEGENERATE * norm(b.v1) * norm(b.v2)


def make_superbase(b: Basis) -> Superbase:
    """Complete a basis to the superbase (-v1-v2, v1, v2)."""
    if is_degenerate(b):
        raise DegenerateBasis(f"basis vectors are numerically collinear: {b}")
    return Superbase(Vec2(-b.v1.x - b.v2.x, -b.v1.y - b.v2.y), b.v1, b.v2)


def conorms(s: Superbase) -> Conorms:
    return Conorms(
        p12=-dot(s.v1, s.v2),
        p01=-dot(s.v0, s.v1),
        p02=-dot(s.v0, s.v2),
    )


def vonorms(s: Superbase) -> Vonorms:
    return Vonorms(vn0=norm_sq(s.v0), vn1=norm_sq(s.v1), vn2=norm_sq(s.v2))


def conorm_tolerance(s: Superbase) -> float:
    """Absolute conorm tolerance for this superbase: EPS_ZERO_REL * max vonorm."""
    return EPS_ZERO_REL * max(vonorms(s))


def norm_from_coefficients(c1: int, c2: int, p: Conorms) -> float:
    """Squared length of c1*v1 + c2*v2 expressed through the conorms."""
    return c1 * c1 * p.p01 + c2 * c2 * p.p02 + (c1 - c2) * (c1 - c2) * p.p12


def _iteration_cap(b: Basis) -> int:
    vns = (norm_sq(b.v1), norm_sq(b.v2), norm_sq(add(b.v1, b.v2)))
    hi = max(vns)
    lo = min(vns)
    if lo <= 0.0 or hi <= 0.0:
        return 64
    return 64 + int(10 * math.log2(hi / lo))


def reduce_to_obtuse(b: Basis) -> Superbase:
    """Reduce a basis to an obtuse superbase of the same lattice.

    The result generates the identical lattice (the change of basis is an
    integer matrix with determinant +-1) and all its conorms are >= -eps
    with eps = EPS_ZERO_REL * max vonorm.
    """
    if is_degenerate(b):
        raise DegenerateBasis(f"basis vectors are numerically collinear: {b}")
    res = backend.reduce_superbase(
        b.v1.x, b.v1.y, b.v2.x, b.v2.y, EPS_ZERO_REL, _iteration_cap(b)
    )
    if res[10] < 0:
        raise NonTermination(f"reduction did not converge for basis {b}")
    return Superbase(
        Vec2(res[0], res[1]), Vec2(res[2], res[3]), Vec2(res[4], res[5])
    )


def reduction_transform(b: Basis) -> tuple[Superbase, tuple[int, int, int, int]]:
    """Like reduce_to_obtuse, also returning the integer change of basis.

    The tuple (a, b01, c, d) satisfies out.v1 = a*in.v1 + b01*in.v2 and
    out.v2 = c*in.v1 + d*in.v2 with a*d - b01*c = +-1.
    """
    if is_degenerate(b):
        raise DegenerateBasis(f"basis vectors are numerically collinear: {b}")
    res = backend.reduce_superbase(
        b.v1.x, b.v1.y, b.v2.x, b.v2.y, EPS_ZERO_REL, _iteration_cap(b)
    )
    if res[10] < 0:
        raise NonTermination(f"reduction did not converge for basis {b}")
    sb = Superbase(Vec2(res[0], res[1]), Vec2(res[2], res[3]), Vec2(res[4], res[5]))
    return sb, (res[6], res[7], res[8], res[9])
