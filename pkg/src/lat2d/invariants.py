"""Complete invariants of planar lattices.

The root invariant (the sorted square roots of the three conorms of an
obtuse superbase) classifies lattices up to isometry; adding a sign in
{-1, 0, +1} refines this to rigid motion, and normalizing by the size
sigma = r12 + r01 + r02 gives the projected invariant, complete up to
similarity.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from lat2d.errors import NotObtuse, OutsideObt
from lat2d.geometry import (
    Basis,
    Conorms,
    Superbase,
    Vec2,
    conorm_tolerance,
    conorms,
    cross,
    dot,
    norm_sq,
)

# Relative tolerance (times r02) for equal root products / zero detection.
EPS_EQUAL_REL = 1e-9
# Tolerance for membership of the quotient-triangle boundary.
EPS_BOUNDARY = 1e-9


class RootInvariant(NamedTuple):
    """Nondecreasing triple of root products, 0 <= r12 <= r01 <= r02."""

    r12: float
    r01: float
    r02: float


class OrientedRootInvariant(NamedTuple):
    ri: RootInvariant
    sign: int


class ProjectedInvariant(NamedTuple):
    """Point (x, y) of the quotient triangle 0 <= x < 1, 0 <= y, x + y <= 1."""

    x: float
    y: float


class OrientedProjectedInvariant(NamedTuple):
    pi: ProjectedInvariant
    sign: int


def obtuse_conorms(s: Superbase) -> Conorms:
    """Conorms of s, clamped at zero; raises NotObtuse beyond tolerance."""
    p = conorms(s)
    eps = conorm_tolerance(s)
    if min(p) < -eps:
        raise NotObtuse(f"superbase has a negative conorm: {p}")
    return Conorms(*(max(0.0, v) for v in p))


def root_invariant(s: Superbase) -> RootInvariant:
    """Sorted square roots of the conorms of an obtuse superbase."""
    p = obtuse_conorms(s)
    return RootInvariant(*sorted(math.sqrt(v) for v in p))


def is_mirror_symmetric(ri: RootInvariant) -> bool:
    """True when the lattice coincides with its mirror image.

    Holds exactly when the smallest root product vanishes (rectangular) or
    two root products are equal (centred rectangular, square, hexagonal).
    """
    tol = EPS_EQUAL_REL * ri.r02
    return ri.r12 <= tol or ri.r01 - ri.r12 <= tol or ri.r02 - ri.r01 <= tol


def sign_of(s: Superbase) -> int:
    """Orientation sign of the lattice: 0 for mirror-symmetric ones, else
    the sign of det(u, w) for the two shortest superbase vectors |u| < |w|."""
    ri = root_invariant(s)
    if is_mirror_symmetric(ri):
        return 0
    vecs = sorted(s, key=norm_sq)
    d = cross(vecs[0], vecs[1])
    return 1 if d > 0.0 else -1


def sign_via_region(v2: Vec2) -> int:
    """Sign of the lattice with obtuse superbase v1 = (1, 0), v2 = (x, y).

    Cross-validation path: the region -1 <= x <= 0 < y, x^2 + x + y^2 >= 0
    splits into six subregions by the ordering of the three conorms
    p12 = -x, p01 = 1 + x, p02 = x^2 + x + y^2; the sign is the permutation
    parity of that ordering, and any tie (within tolerance) gives 0.
    """
    x, y = v2
    p12 = -x
    p01 = 1.0 + x
    p02 = x * x + x + y * y
    tol = EPS_BOUNDARY * max(1.0, p12, p01, p02)
    if y <= 0.0 or p12 < -tol or p01 < -tol or p02 < -tol:
        raise OutsideObt(f"({x}, {y}) is not in the obtuse-superbase region")
    labeled = sorted(((p12, 0), (p01, 1), (p02, 2)))
    if labeled[1][0] - labeled[0][0] <= tol or labeled[2][0] - labeled[1][0] <= tol:
        return 0
    if labeled[0][0] <= tol:
        return 0
    order = tuple(i for _, i in labeled)
    even = order in ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    return 1 if even else -1


def oriented_root_invariant(s: Superbase) -> OrientedRootInvariant:
    return OrientedRootInvariant(root_invariant(s), sign_of(s))


def size(ri: RootInvariant) -> float:
    """Size sigma: the sum of the three root products (length units)."""
    return ri.r12 + ri.r01 + ri.r02


def projected_invariant(ri: RootInvariant) -> ProjectedInvariant:
    """Size-normalized invariant (x, y) in the quotient triangle."""
    sigma = size(ri)
    x = (ri.r02 - ri.r01) / sigma
    y = 3.0 * ri.r12 / sigma
    x = min(max(x, 0.0), 1.0)
    y = min(max(y, 0.0), 1.0)
    if x + y > 1.0:
        # Round x + y = 1 boundary cases back onto the hypotenuse.
        over = x + y - 1.0
        x -= over * 0.5
        y -= over * 0.5
    return ProjectedInvariant(x, y)


def oriented_projected_invariant(s: Superbase) -> OrientedProjectedInvariant:
    return OrientedProjectedInvariant(
        projected_invariant(root_invariant(s)), sign_of(s)
    )


def metric_tensor(ri: RootInvariant) -> tuple[float, float, float]:
    """Quadratic form coefficients (q11, q12, q22) of the reduced basis:
    q11 = r12^2 + r01^2, q12 = -r12^2, q22 = r12^2 + r02^2."""
    sq12 = ri.r12 * ri.r12
    return (sq12 + ri.r01 * ri.r01, -sq12, sq12 + ri.r02 * ri.r02)


def reduced_basis(s: Superbase, mode: str = "isometry") -> Basis:
    """Canonical reduced basis drawn from the superbase vectors.

    isometry mode: |v1| <= |v2| and -v1^2/2 <= v1.v2 <= 0.
    rigid-motion mode: |v1| <= |v2|, -v1^2/2 < v1.v2 <= v1^2/2,
    det(v1, v2) > 0, and v1.v2 >= 0 whenever |v1| = |v2|.
    """
    if mode not in ("isometry", "rigid-motion"):
        raise ValueError(f"unknown reduction mode: {mode!r}")
    obtuse_conorms(s)
    scale_sq = max(norm_sq(v) for v in s)
    tol = EPS_EQUAL_REL * scale_sq
    candidates = []
    vecs = (s.v0, s.v1, s.v2)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for si in (1.0, -1.0):
                for sj in (1.0, -1.0):
                    a = Vec2(si * vecs[i].x, si * vecs[i].y)
                    b = Vec2(sj * vecs[j].x, sj * vecs[j].y)
                    na = norm_sq(a)
                    nb = norm_sq(b)
                    if na > nb + tol:
                        continue
                    ab = dot(a, b)
                    if mode == "isometry":
                        if not (-0.5 * na - tol <= ab <= tol):
                            continue
                    else:
                        if not (-0.5 * na + tol < ab <= 0.5 * na + tol):
                            continue
                        if cross(a, b) <= 0.0:
                            continue
                        if abs(na - nb) <= tol and ab < -tol:
                            continue
                    candidates.append(Basis(a, b))
    if not candidates:
        raise RuntimeError(f"no reduced basis found for {s}")

    def rank(basis: Basis) -> tuple:
        a, b = basis
        det_pos = cross(a, b) > 0.0
        upper = a.y > tol or (abs(a.y) <= tol and a.x > 0.0)
        return (not det_pos, not upper, a, b)

    return min(candidates, key=rank)
