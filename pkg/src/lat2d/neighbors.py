"""Voronoi vectors, nearest-neighbour distance sequences, brute-force oracles.

The six partial sums +-v0, +-v1, +-v2 of an obtuse superbase are the
Voronoi vectors of the lattice; each is a shortest vector of its coset
modulo the doubled lattice. The reduced sequence of distances (one entry
per +- pair of lattice neighbours of the origin) is a complete isometry
invariant, and the first three vonorms can be recovered from it.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from lat2d import backend
from lat2d.errors import DegenerateBasis, InsufficientLength
from lat2d.geometry import (
    Basis,
    Superbase,
    Vec2,
    Vonorms,
    conorm_tolerance,
    is_degenerate,
    neg,
    norm_sq,
)
from lat2d.invariants import obtuse_conorms

# Relative tolerance (times d1) for matched distances during extraction.
EPS_MATCH_REL = 1e-9


class VoronoiVectorSet(NamedTuple):
    """Six Voronoi vectors in +- pairs with strictness flags."""

    vectors: tuple[tuple[Vec2, bool], ...]


class DistanceSequence(NamedTuple):
    """Nondecreasing distances, one per +- pair of lattice neighbours."""

    distances: tuple[float, ...]


def voronoi_vectors(s: Superbase) -> VoronoiVectorSet:
    """The partial sums +-v0, +-v1, +-v2 with strictness flags.

    A pair +-v_i supports a full Voronoi-cell edge (strict) exactly when
    the conorm of the opposite vector pair is positive; at most one conorm
    can vanish, which happens for rectangular lattices.
    """
    p = obtuse_conorms(s)
    eps = conorm_tolerance(s)
    # Conorm opposite to v0 is p12, to v1 is p02, to v2 is p01.
    strict = (p.p12 > eps, p.p02 > eps, p.p01 > eps)
    out = []
    for v, flag in zip(s, strict):
        out.append((v, flag))
        out.append((neg(v), flag))
    return VoronoiVectorSet(tuple(out))


def two_lambda_class_minima(
    s: Superbase, c1: int, c2: int, window: int = 5
) -> tuple[float, int]:
    """Brute-force check data for the coset (c1*v1 + c2*v2) + 2*lattice.

    Returns the smallest squared vector length in the coset restricted to
    coefficients c + 2k with |k_i| <= window, and how many coset vectors
    attain it (within relative tolerance).
    """
    best = math.inf
    count = 0
    for k1 in range(-window, window + 1):
        for k2 in range(-window, window + 1):
            a1 = c1 + 2 * k1
            a2 = c2 + 2 * k2
            vx = a1 * s.v1.x + a2 * s.v2.x
            vy = a1 * s.v1.y + a2 * s.v2.y
            d = vx * vx + vy * vy
            if d < best * (1.0 - 1e-12):
                best = d
                count = 1
            elif d <= best * (1.0 + 1e-12):
                count += 1
    return best, count


def _stable_distances_sq(v1: Vec2, v2: Vec2, k: int) -> list[float]:
    """First k squared distances, enumerating with a doubling radius until
    the prefix stops changing."""
    radius = max(2, math.isqrt(k) + 2)
    prev: list[float] | None = None
    while True:
        cur = backend.lattice_distances_sq(v1.x, v1.y, v2.x, v2.y, radius)[:k]
        if prev is not None and len(prev) >= k and prev == cur:
            return cur
        prev = cur
        radius *= 2


def rsd(s: Superbase, k: int) -> DistanceSequence:
    """First k distances from the origin to its lattice neighbours, one
    entry per +- pair, in nondecreasing order."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    sq = _stable_distances_sq(s.v1, s.v2, k)
    return DistanceSequence(tuple(math.sqrt(d) for d in sq))


def kth_distance_oracle(b: Basis, k: int) -> float:
    """Independent brute-force k-th neighbour distance for cross-checks.

    Enumerates coefficient pairs directly (no kernel) and doubles the
    search radius until the k-th smallest distance is stable.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if is_degenerate(b):
        raise DegenerateBasis(f"basis vectors are numerically collinear: {b}")
    radius = max(2, math.isqrt(k) + 2)
    prev = None
    while True:
        dists = []
        for c1 in range(0, radius + 1):
            lo = 1 if c1 == 0 else -radius
            for c2 in range(lo, radius + 1):
                vx = c1 * b.v1.x + c2 * b.v2.x
                vy = c1 * b.v1.y + c2 * b.v2.y
                dists.append(vx * vx + vy * vy)
        dists.sort()
        cur = dists[k - 1] if len(dists) >= k else None
        if cur is not None and cur == prev:
            return math.sqrt(cur)
        prev = cur
        radius *= 2


def extract_vonorms_from_rsd(d: DistanceSequence) -> Vonorms:
    """Recover the three vonorms from a reduced sequence of distances.

    Walks the sequence in order, cancelling exactly one occurrence of each
    integer multiple of an already-confirmed distance; the first three
    surviving entries are the lengths of the three shortest Voronoi
    vectors. Raises InsufficientLength when the sequence ends first or an
    expected multiple is missing (ambiguous/truncated input).
    """
    vals = list(d.distances)
    if len(vals) < 3:
        raise InsufficientLength("need at least three distances")
    if any(b < a for a, b in zip(vals, vals[1:])) or vals[0] <= 0.0:
        raise InsufficientLength("distances must be positive and nondecreasing")
    tol = EPS_MATCH_REL * vals[0]
    confirmed: list[float] = []
    # Pending integer multiples of confirmed distances: [value, base].
    pending: list[list[float]] = []
    i = 0
    n = len(vals)
    while i < n:
        v = vals[i]
        # Occurrences of the current value.
        j = i
        while j < n and vals[j] - v <= tol:
            j += 1
        group = j - i
        pending.sort()
        if pending and pending[0][0] < v - tol:
            raise InsufficientLength(
                f"expected multiple {pending[0][0]} missing before {v}"
            )
        matched = 0
        for entry in pending:
            if abs(entry[0] - v) <= tol and matched < group:
                matched += 1
                entry[0] += entry[1]  # advance to the next multiple
        for _ in range(group - matched):
            confirmed.append(v)
            pending.append([2.0 * v, v])
            if len(confirmed) == 3:
                d1, d2, d3 = confirmed
                return Vonorms(vn0=d3 * d3, vn1=d1 * d1, vn2=d2 * d2)
        i = j
    raise InsufficientLength(
        f"only {len(confirmed)} Voronoi distances found in {n} entries"
    )
