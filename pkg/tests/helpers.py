"""Shared fixtures: reference lattices, random generators, tolerance asserts."""

from __future__ import annotations

import math
import random

from lat2d.design import superbase_from_ri
from lat2d.geometry import Basis, Superbase, Vec2, rotate
from lat2d.invariants import ProjectedInvariant, RootInvariant

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)

# Reference lattices: root invariant, size, projected invariant, sorted
# vonorms, and the signs they admit.
SQUARE = {
    "ri": RootInvariant(0.0, 1.0, 1.0),
    "sigma": 2.0,
    "pi": ProjectedInvariant(0.0, 0.0),
    "vonorms": (1.0, 1.0, 2.0),
    "signs": (0,),
}
HEX = {
    "ri": RootInvariant(1.0, 1.0, 1.0),
    "sigma": 3.0,
    "pi": ProjectedInvariant(0.0, 1.0),
    "vonorms": (2.0, 2.0, 2.0),
    "signs": (0,),
}
L0 = {
    "ri": RootInvariant(1.0, 1.0, 4.0),
    "sigma": 6.0,
    "pi": ProjectedInvariant(0.5, 0.5),
    "vonorms": (2.0, 17.0, 17.0),
    "signs": (0,),
}
L2 = {
    "ri": RootInvariant(2.0 - SQRT2, 2.0 * SQRT2 - 1.0, 5.0 - SQRT2),
    "sigma": 6.0,
    "pi": ProjectedInvariant(1.0 / (2.0 + SQRT2), 1.0 / (2.0 + SQRT2)),
    "vonorms": (15.0 - 8.0 * SQRT2, 33.0 - 14.0 * SQRT2, 36.0 - 14.0 * SQRT2),
    "signs": (1, -1),
}
LINF = {
    "ri": RootInvariant(1.0, 4.0, 7.0),
    "sigma": 12.0,
    "pi": ProjectedInvariant(0.25, 0.25),
    "vonorms": (17.0, 50.0, 65.0),
    "signs": (1, -1),
}

REFERENCE = {"square": SQUARE, "hex": HEX, "L0": L0, "L2": L2, "Linf": LINF}


def assert_close(a: float, b: float, tol: float = 1e-9) -> None:
    assert abs(a - b) <= tol * max(1.0, abs(a), abs(b)), f"{a} != {b} (tol {tol})"


def assert_triple(a, b, tol: float = 1e-9) -> None:
    for x, y in zip(a, b):
        assert_close(x, y, tol)


def reference_superbase(name: str, sign: int = 0) -> Superbase:
    return superbase_from_ri(REFERENCE[name]["ri"], sign)


def reference_basis(name: str, sign: int = 0) -> Basis:
    s = reference_superbase(name, sign)
    return Basis(s.v1, s.v2)


def rotate_basis(b: Basis, angle: float) -> Basis:
    return Basis(rotate(b.v1, angle), rotate(b.v2, angle))


def reflect_basis(b: Basis) -> Basis:
    return Basis(Vec2(b.v1.x, -b.v1.y), Vec2(b.v2.x, -b.v2.y))


def apply_unimodular(b: Basis, m: tuple[int, int, int, int]) -> Basis:
    a, c, d, e = m
    return Basis(
        Vec2(a * b.v1.x + c * b.v2.x, a * b.v1.y + c * b.v2.y),
        Vec2(d * b.v1.x + e * b.v2.x, d * b.v1.y + e * b.v2.y),
    )


def random_unimodular(rng: random.Random, steps: int = 6) -> tuple[int, int, int, int]:
    """Random integer matrix with determinant +-1 (product of shears/swaps)."""
    a, b, c, d = 1, 0, 0, 1
    for _ in range(steps):
        k = rng.randint(-3, 3)
        if rng.random() < 0.5:
            a, b = a + k * c, b + k * d
        else:
            c, d = c + k * a, d + k * b
        if rng.random() < 0.3:
            a, b, c, d = c, d, a, b
        if rng.random() < 0.2:
            a, b = -a, -b
    return a, b, c, d


def random_root_invariant(
    rng: random.Random, scale: float = 1.0, chiral_margin: float = 0.0
) -> RootInvariant:
    """Random point of the invariant cone; chiral_margin > 0 keeps it away
    from the mirror-symmetric boundary."""
    r12 = (chiral_margin + rng.uniform(0.0, 1.0)) * scale
    r01 = r12 + (chiral_margin + rng.uniform(0.0, 1.0)) * scale
    r02 = r01 + (chiral_margin + rng.uniform(0.0, 1.0)) * scale
    return RootInvariant(r12, r01, r02)


def random_superbase(
    rng: random.Random, scale: float = 1.0, chiral_margin: float = 0.0
) -> Superbase:
    ri = random_root_invariant(rng, scale, chiral_margin)
    sign = 0 if _is_boundary(ri) else rng.choice((1, -1))
    s = superbase_from_ri(ri, sign)
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return Superbase(*(rotate(v, angle) for v in s))


def _is_boundary(ri: RootInvariant) -> bool:
    tol = 1e-9 * ri.r02
    return ri.r12 <= tol or ri.r01 - ri.r12 <= tol or ri.r02 - ri.r01 <= tol


def random_basis(rng: random.Random, scale: float = 1.0) -> Basis:
    """Random well-conditioned basis (not reduced, not necessarily obtuse)."""
    while True:
        b = Basis(
            Vec2(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
            Vec2(rng.uniform(-scale, scale), rng.uniform(-scale, scale)),
        )
        det = b.v1.x * b.v2.y - b.v1.y * b.v2.x
        n1 = math.hypot(b.v1.x, b.v1.y)
        n2 = math.hypot(b.v2.x, b.v2.y)
        if n1 > 1e-3 * scale and n2 > 1e-3 * scale and abs(det) > 1e-2 * n1 * n2:
            return b
