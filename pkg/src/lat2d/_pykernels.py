"""Pure-Python implementations of the hot kernels.

The compiled extension ``lat2d._ckernels`` provides the same three functions
with identical semantics; ``lat2d.backend`` picks whichever is available.
Keep the two implementations in lockstep.
"""

import math

BACKEND = "python"


def reduce_superbase(v1x, v1y, v2x, v2y, rel_eps, max_iter):
    """Reduce the basis (v1, v2) to an obtuse superbase (v0, v1, v2).

    Runs a Lagrange-style pair reduction first (integer multiples, so the
    iteration count stays logarithmic in the vonorm ratio), then flips the
    most negative conorm pair until all conorms are >= -eps, where
    eps = rel_eps * max(vonorm).

    Returns (v0x, v0y, v1x, v1y, v2x, v2y, a, b, c, d, n_iter) where
    (a, b, c, d) are integers with v1_out = a*v1_in + b*v2_in and
    v2_out = c*v1_in + d*v2_in, and n_iter == -1 signals the cap was hit.
    """
    a, b, c, d = 1, 0, 0, 1
    n = 0
    # Pair reduction: order by length, subtract the rounded projection.
    while n < max_iter:
        n1 = v1x * v1x + v1y * v1y
        n2 = v2x * v2x + v2y * v2y
        if n1 > n2:
            v1x, v1y, v2x, v2y = v2x, v2y, v1x, v1y
            a, b, c, d = c, d, a, b
            n1 = n2
        if n1 <= 0.0:
            break
        ratio = (v1x * v2x + v1y * v2y) / n1
        mu = math.floor(ratio + 0.5)
        if mu == 0:
            break
        tx = v2x - mu * v1x
        ty = v2y - mu * v1y
        # Commit only on strict progress; float ties at ratio ~ +-1/2
        # would otherwise oscillate forever.
        if tx * tx + ty * ty >= n2:
            break
        v2x, v2y = tx, ty
        c -= mu * a
        d -= mu * b
        n += 1
    else:
        return (0.0, 0.0, v1x, v1y, v2x, v2y, a, b, c, d, -1)
    if v1x * v2x + v1y * v2y > 0.0:
        v2x, v2y = -v2x, -v2y
        c, d = -c, -d
    v0x = -v1x - v2x
    v0y = -v1y - v2y
    # Conorm flips: each one strictly shrinks the opposite vonorm.
    while True:
        p12 = -(v1x * v2x + v1y * v2y)
        p01 = -(v0x * v1x + v0y * v1y)
        p02 = -(v0x * v2x + v0y * v2y)
        vn0 = p01 + p02
        vn1 = p01 + p12
        vn2 = p02 + p12
        eps = rel_eps * max(vn0, vn1, vn2)
        if min(p12, p01, p02) >= -eps:
            return (v0x, v0y, v1x, v1y, v2x, v2y, a, b, c, d, n)
        if n >= max_iter:
            return (v0x, v0y, v1x, v1y, v2x, v2y, a, b, c, d, -1)
        if p12 <= p01 and p12 <= p02:
            # (v0, v1, v2) <- (v1 - v2, -v1, v2)
            tx, ty = v1x - v2x, v1y - v2y
            v1x, v1y = -v1x, -v1y
            v0x, v0y = tx, ty
            a, b = -a, -b
        elif p01 <= p02:
            # (v0, v1, v2) <- (-v0, v1, v0 - v1)
            tx, ty = v0x - v1x, v0y - v1y
            v0x, v0y = -v0x, -v0y
            v2x, v2y = tx, ty
            c, d = -2 * a - c, -2 * b - d
        else:
            # (v0, v1, v2) <- (-v0, v0 - v2, v2)
            tx, ty = v0x - v2x, v0y - v2y
            v0x, v0y = -v0x, -v0y
            v1x, v1y = tx, ty
            a, b = -a - 2 * c, -b - 2 * d
        n += 1


def lattice_distances_sq(v1x, v1y, v2x, v2y, radius):
    """Sorted squared lengths |c1*v1 + c2*v2|^2, one per +/- pair of c != 0.

    Covers all coefficient pairs with |c1|, |c2| <= radius, keeping the
    representative with c1 > 0 or (c1 == 0 and c2 > 0).
    """
    out = []
    append = out.append
    for c2 in range(1, radius + 1):
        append((c2 * v2x) ** 2 + (c2 * v2y) ** 2)
    for c1 in range(1, radius + 1):
        px = c1 * v1x
        py = c1 * v1y
        for c2 in range(-radius, radius + 1):
            dx = px + c2 * v2x
            dy = py + c2 * v2y
            append(dx * dx + dy * dy)
    out.sort()
    return out


def min_rotation_gap(s1, a1, b1, s2, a2, b2, s3, a3, b3, n_grid, refine_iters):
    """Minimize max_i sqrt(s_i - 2*(a_i*cos t + b_i*sin t)) over angles t.

    s_i = |u_i|^2 + |v_i|^2, a_i = u_i . v_i, b_i = u_i x v_i for vector
    pairs (u_i, v_i); the expression under the root is |R(t) u_i - v_i|^2.
    A coarse grid scan locates the basin, golden-section refines it.
    """

    def gap_sq(t):
        ct = math.cos(t)
        st = math.sin(t)
        g = s1 - 2.0 * (a1 * ct + b1 * st)
        g2 = s2 - 2.0 * (a2 * ct + b2 * st)
        if g2 > g:
            g = g2
        g3 = s3 - 2.0 * (a3 * ct + b3 * st)
        if g3 > g:
            g = g3
        return g

    two_pi = 2.0 * math.pi
    step = two_pi / n_grid
    best_t = 0.0
    best = gap_sq(0.0)
    for i in range(1, n_grid):
        t = i * step
        g = gap_sq(t)
        if g < best:
            best = g
            best_t = t
    lo = best_t - step
    hi = best_t + step
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1 = gap_sq(x1)
    f2 = gap_sq(x2)
    for _ in range(refine_iters):
        if f1 <= f2:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = gap_sq(x1)
        else:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = gap_sq(x2)
        if hi - lo < 1e-10:
            break
    best = min(best, f1, f2)
    return math.sqrt(best) if best > 0.0 else 0.0
