# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Semantics must match lat2d._pykernels exactly; the backend module falls
back to the pure-Python versions when this extension is unavailable.
"""

from libc.math cimport cos, floor, sin, sqrt
from libc.stdlib cimport free, malloc, qsort

BACKEND = "cython"


def reduce_superbase(double v1x, double v1y, double v2x, double v2y,
                     double rel_eps, int max_iter):
    """See lat2d._pykernels.reduce_superbase."""
    cdef long a = 1, b = 0, c = 0, d = 1
    cdef long mu
    cdef int n = 0
    cdef double n1, n2, tx, ty
    cdef double v0x, v0y, p12, p01, p02, vn0, vn1, vn2, eps, m
    cdef bint capped = True
    while n < max_iter:
        n1 = v1x * v1x + v1y * v1y
        n2 = v2x * v2x + v2y * v2y
        if n1 > n2:
            tx = v1x; ty = v1y
            v1x = v2x; v1y = v2y
            v2x = tx; v2y = ty
            mu = a; a = c; c = mu
            mu = b; b = d; d = mu
            n1 = n2
        if n1 <= 0.0:
            capped = False
            break
        mu = <long>floor((v1x * v2x + v1y * v2y) / n1 + 0.5)
        if mu == 0:
            capped = False
            break
        tx = v2x - mu * v1x
        ty = v2y - mu * v1y
        # Commit only on strict progress; float ties at ratio ~ +-1/2
        # would otherwise oscillate forever.
        if tx * tx + ty * ty >= n2:
            capped = False
            break
        v2x = tx; v2y = ty
        c -= mu * a
        d -= mu * b
        n += 1
    if capped:
        return (0.0, 0.0, v1x, v1y, v2x, v2y, a, b, c, d, -1)
    if v1x * v2x + v1y * v2y > 0.0:
        v2x = -v2x; v2y = -v2y
        c = -c; d = -d
    v0x = -v1x - v2x
    v0y = -v1y - v2y
    while True:
        p12 = -(v1x * v2x + v1y * v2y)
        p01 = -(v0x * v1x + v0y * v1y)
        p02 = -(v0x * v2x + v0y * v2y)
        vn0 = p01 + p02
        vn1 = p01 + p12
        vn2 = p02 + p12
        eps = vn0
        if vn1 > eps:
            eps = vn1
        if vn2 > eps:
            eps = vn2
        eps *= rel_eps
        m = p12
        if p01 < m:
            m = p01
        if p02 < m:
            m = p02
        if m >= -eps:
            return (v0x, v0y, v1x, v1y, v2x, v2y, a, b, c, d, n)
        if n >= max_iter:
            return (v0x, v0y, v1x, v1y, v2x, v2y, a, b, c, d, -1)
        if p12 <= p01 and p12 <= p02:
            tx = v1x - v2x; ty = v1y - v2y
            v1x = -v1x; v1y = -v1y
            v0x = tx; v0y = ty
            a = -a; b = -b
        elif p01 <= p02:
            tx = v0x - v1x; ty = v0y - v1y
            v0x = -v0x; v0y = -v0y
            v2x = tx; v2y = ty
            c = -2 * a - c
            d = -2 * b - d
        else:
            tx = v0x - v2x; ty = v0y - v2y
            v0x = -v0x; v0y = -v0y
            v1x = tx; v1y = ty
            a = -a - 2 * c
            b = -b - 2 * d
        n += 1


cdef int _cmp_double(const void* pa, const void* pb) noexcept nogil:
    cdef double x = (<const double*>pa)[0]
    cdef double y = (<const double*>pb)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def lattice_distances_sq(double v1x, double v1y, double v2x, double v2y,
                         int radius):
    """See lat2d._pykernels.lattice_distances_sq."""
    cdef Py_ssize_t count = radius + radius * (2 * radius + 1)
    cdef double* buf = <double*>malloc(count * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k = 0
    cdef int c1, c2
    cdef double px, py, dx, dy
    for c2 in range(1, radius + 1):
        dx = c2 * v2x
        dy = c2 * v2y
        buf[k] = dx * dx + dy * dy
        k += 1
    for c1 in range(1, radius + 1):
        px = c1 * v1x
        py = c1 * v1y
        for c2 in range(-radius, radius + 1):
            dx = px + c2 * v2x
            dy = py + c2 * v2y
            buf[k] = dx * dx + dy * dy
            k += 1
    qsort(buf, count, sizeof(double), _cmp_double)
    out = [0.0] * count
    for k in range(count):
        out[k] = buf[k]
    free(buf)
    return out


cdef inline double _gap_sq(double t,
                           double s1, double a1, double b1,
                           double s2, double a2, double b2,
                           double s3, double a3, double b3) noexcept nogil:
    cdef double ct = cos(t)
    cdef double st = sin(t)
    cdef double g = s1 - 2.0 * (a1 * ct + b1 * st)
    cdef double g2 = s2 - 2.0 * (a2 * ct + b2 * st)
    cdef double g3 = s3 - 2.0 * (a3 * ct + b3 * st)
    if g2 > g:
        g = g2
    if g3 > g:
        g = g3
    return g


def min_rotation_gap(double s1, double a1, double b1,
                     double s2, double a2, double b2,
                     double s3, double a3, double b3,
                     int n_grid, int refine_iters):
    """See lat2d._pykernels.min_rotation_gap."""
    cdef double two_pi = 6.283185307179586476925286766559
    cdef double step = two_pi / n_grid
    cdef double best_t = 0.0
    cdef double best = _gap_sq(0.0, s1, a1, b1, s2, a2, b2, s3, a3, b3)
    cdef double t, g, lo, hi, x1, x2, f1, f2
    cdef int i
    for i in range(1, n_grid):
        t = i * step
        g = _gap_sq(t, s1, a1, b1, s2, a2, b2, s3, a3, b3)
        if g < best:
            best = g
            best_t = t
    lo = best_t - step
    hi = best_t + step
    cdef double inv_phi = 0.61803398874989484820458683436564
    x1 = hi - inv_phi * (hi - lo)
    x2 = lo + inv_phi * (hi - lo)
    f1 = _gap_sq(x1, s1, a1, b1, s2, a2, b2, s3, a3, b3)
    f2 = _gap_sq(x2, s1, a1, b1, s2, a2, b2, s3, a3, b3)
    for i in range(refine_iters):
        if f1 <= f2:
            hi = x2
            x2 = x1; f2 = f1
            x1 = hi - inv_phi * (hi - lo)
            f1 = _gap_sq(x1, s1, a1, b1, s2, a2, b2, s3, a3, b3)
        else:
            lo = x1
            x1 = x2; f1 = f2
            x2 = lo + inv_phi * (hi - lo)
            f2 = _gap_sq(x2, s1, a1, b1, s2, a2, b2, s3, a3, b3)
        if hi - lo < 1e-10:
            break
    if f1 < best:
        best = f1
    if f2 < best:
        best = f2
    return sqrt(best) if best > 0.0 else 0.0
