"""Real-valued chirality measures: distance to the nearest lattice whose
point group contains D2 (mirror-symmetric), D4 (square) or D6 (hexagonal).

Root chiralities live in the cone of root invariants, projected ones in
the quotient triangle. Both vanish exactly on the target symmetry class
and are 1-Lipschitz with respect to the corresponding metric.
"""

from __future__ import annotations

import math

from lat2d.errors import UnsupportedQ
from lat2d.invariants import (
    OrientedProjectedInvariant,
    OrientedRootInvariant,
    ProjectedInvariant,
    RootInvariant,
)
from lat2d.metrics import (
    INF,
    _check_q,
    minimize_over_cone_boundary,
    minimize_over_triangle_boundary,
    minkowski_norm,
)

POINT_GROUPS = ("D2", "D4", "D6")

_SQRT2 = math.sqrt(2.0)


def _check_group(g: str) -> str:
    if g not in POINT_GROUPS:
        raise ValueError(f"point group must be one of {POINT_GROUPS}, got {g!r}")
    return g


def root_chirality(ri: RootInvariant, g: str, q: float) -> float:
    """Distance from a root invariant to the invariants of G-symmetric lattices.

    Closed forms exist for q in {2, inf}; the D2 case additionally supports
    any q >= 1 through numeric minimization over the cone boundary.
    """
    _check_group(g)
    _check_q(q)
    r12, r01, r02 = ri
    if g == "D2":
        if q == 2.0:
            return min(r12, (r01 - r12) / _SQRT2, (r02 - r01) / _SQRT2)
        if q == INF:
            return min(r12, (r01 - r12) / 2.0, (r02 - r01) / 2.0)
        hi = 1.25 * r02
        return minimize_over_cone_boundary(
            lambda t12, t01, t02: minkowski_norm(
                (r12 - t12, r01 - t01, r02 - t02), q
            ),
            hi,
        )
    if g == "D4":
        if q == 2.0:
            return math.sqrt(r12 * r12 + 0.25 * (r02 - r01) ** 2)
        if q == INF:
            return min(r12, (r02 - r01) / 2.0)
        raise UnsupportedQ(f"root D4 chirality requires q in {{2, inf}}, got {q}")
    if q == 2.0:
        return math.sqrt(
            (2.0 / 3.0)
            * (
                r12 * r12
                + r01 * r01
                + r02 * r02
                - r12 * r01
                - r12 * r02
                - r01 * r02
            )
        )
    if q == INF:
        return (r02 - r12) / 2.0
    raise UnsupportedQ(f"root D6 chirality requires q in {{2, inf}}, got {q}")


def projected_chirality(pi: ProjectedInvariant, g: str, q: float) -> float:
    """Distance from a projected invariant to the G-symmetric subspace of
    the quotient triangle: its boundary for D2, the vertex (0, 0) for D4
    and the vertex (0, 1) for D6."""
    _check_group(g)
    _check_q(q)
    x, y = pi
    if g == "D4":
        return minkowski_norm((x, y), q)
    if g == "D6":
        return minkowski_norm((x, 1.0 - y), q)
    if q == 2.0:
        return min(x, y, (1.0 - x - y) / _SQRT2)
    if q == INF:
        return min(x, y, (1.0 - x - y) / 2.0)
    return minimize_over_triangle_boundary(
        lambda tx, ty: minkowski_norm((x - tx, y - ty), q)
    )


def signed_chirality(
    inv: OrientedRootInvariant | OrientedProjectedInvariant, g: str, q: float
) -> float:
    """sign(lattice) times the chirality; invariant up to rigid motion."""
    if isinstance(inv, OrientedRootInvariant):
        return inv.sign * root_chirality(inv.ri, g, q)
    if isinstance(inv, OrientedProjectedInvariant):
        return inv.sign * projected_chirality(inv.pi, g, q)
    raise TypeError(f"expected an oriented invariant, got {type(inv).__name__}")
