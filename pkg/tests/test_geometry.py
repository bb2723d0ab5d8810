"""Superbase arithmetic and reduction to an obtuse superbase."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import assert_close, assert_triple, random_basis, random_unimodular, apply_unimodular
from lat2d.errors import DegenerateBasis
from lat2d.geometry import (
    Basis,
    Conorms,
    Superbase,
    Vec2,
    conorms,
    cross,
    make_superbase,
    norm_from_coefficients,
    norm_sq,
    reduce_to_obtuse,
    reduction_transform,
    vonorms,
)


class TestMakeSuperbase:
    def test_worked_example(self):
        s = make_superbase(Basis(Vec2(3, 0), Vec2(-1, 3)))
        assert s.v0 == Vec2(-2, -3)

    def test_unit_square(self):
        s = make_superbase(Basis(Vec2(1, 0), Vec2(0, 1)))
        assert s.v0 == Vec2(-1, -1)

    def test_degenerate(self):
        with pytest.raises(DegenerateBasis):
            make_superbase(Basis(Vec2(1, 0), Vec2(1, 0)))


class TestConorms:
    def test_worked_example(self):
        s = Superbase(Vec2(-2, -3), Vec2(3, 0), Vec2(-1, 3))
        assert conorms(s) == Conorms(3, 6, 7)

    def test_rectangular(self):
        s = Superbase(Vec2(-1, -2), Vec2(1, 0), Vec2(0, 2))
        assert conorms(s) == Conorms(0, 1, 4)

    def test_unit_square(self):
        s = Superbase(Vec2(-1, -1), Vec2(1, 0), Vec2(0, 1))
        assert conorms(s) == Conorms(0, 1, 1)


class TestVonorms:
    def test_large_wide(self):
        # Superbase with root invariant (1, 4, 7).
        a = math.sqrt(17.0)
        b = math.sqrt(849.0)
        s = make_superbase(Basis(Vec2(a, 0), Vec2(-1 / a, b / a)))
        assert_triple(vonorms(s), (65.0, 17.0, 50.0))

    def test_unit_square(self):
        s = Superbase(Vec2(-1, -1), Vec2(1, 0), Vec2(0, 1))
        assert_triple(vonorms(s), (2.0, 1.0, 1.0))

    def test_hexagonal(self):
        s = make_superbase(
            Basis(Vec2(math.sqrt(2), 0), Vec2(-1 / math.sqrt(2), math.sqrt(1.5)))
        )
        assert_triple(vonorms(s), (2.0, 2.0, 2.0))


class TestNormFromCoefficients:
    def test_recovers_vonorm(self):
        p = Conorms(3, 6, 7)
        assert_close(norm_from_coefficients(1, 0, p), 6 + 3)

    def test_sum_vector(self):
        # |v1 + v2|^2 for the worked superbase equals |(2, 3)|^2 = 13.
        p = Conorms(3, 6, 7)
        assert_close(norm_from_coefficients(1, 1, p), 13.0)

    def test_rectangular_combination(self):
        # |2*(1,0) + (0,2)|^2 = 8 computed directly.
        p = Conorms(0, 1, 4)
        assert_close(norm_from_coefficients(2, 1, p), 8.0)

    def test_matches_direct_arithmetic(self):
        rng = random.Random(5)
        for _ in range(50):
            b = random_basis(rng, 3.0)
            s = reduce_to_obtuse(b)
            p = conorms(s)
            for c1 in range(-10, 11):
                for c2 in range(-10, 11):
                    vx = c1 * s.v1.x + c2 * s.v2.x
                    vy = c1 * s.v1.y + c2 * s.v2.y
                    assert_close(
                        norm_from_coefficients(c1, c2, p), vx * vx + vy * vy, 1e-12
                    )


def _all_conorms_nonneg(s: Superbase, slack: float = 1e-9) -> bool:
    p = conorms(s)
    eps = slack * max(vonorms(s))
    return min(p) >= -eps


def _obtuse_by_search(b: Basis, span: int = 3) -> set:
    """Exhaustive oracle: root invariants of all obtuse superbases reachable
    with small integer coefficient matrices of determinant +-1."""
    found = set()
    rng = range(-span, span + 1)
    for a in rng:
        for c in rng:
            for d in rng:
                for e in rng:
                    if abs(a * e - c * d) != 1:
                        continue
                    cand = apply_unimodular(b, (a, c, d, e))
                    s = make_superbase(cand)
                    if _all_conorms_nonneg(s):
                        ri = tuple(
                            round(math.sqrt(max(0.0, v)), 9)
                            for v in sorted(conorms(s))
                        )
                        found.add(ri)
    return found


class TestReduceToObtuse:
    def test_deformation_three_quarters(self):
        s = reduce_to_obtuse(Basis(Vec2(1, 0), Vec2(0.75, 1)))
        assert _all_conorms_nonneg(s)
        got = sorted(sorted((abs(v.x), abs(v.y))) for v in s)
        want = sorted(
            sorted(x) for x in [(1.0, 0.0), (0.25, 1.0), (0.75, 1.0)]
        )
        for g, w in zip(got, want):
            assert_triple(g, w)

    def test_orthogonal_already_obtuse(self):
        s = reduce_to_obtuse(Basis(Vec2(1, 0), Vec2(0, 2)))
        assert sorted(conorms(s)) == [0, 1, 4]

    def test_matches_exhaustive_search(self):
        b = Basis(Vec2(1, 0), Vec2(0.4, 1))
        expected = _obtuse_by_search(b)
        s = reduce_to_obtuse(b)
        got = tuple(
            round(math.sqrt(max(0.0, v)), 9) for v in sorted(conorms(s))
        )
        assert got in expected
        assert len(expected) == 1  # unique up to isometry

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateBasis):
            reduce_to_obtuse(Basis(Vec2(2, 1), Vec2(4, 2)))

    def test_skewed_basis_terminates(self):
        for n in (10, 1000, 123456):
            s = reduce_to_obtuse(Basis(Vec2(1, 0), Vec2(n, 1)))
            assert _all_conorms_nonneg(s)
            assert_triple(sorted(conorms(s)), (0.0, 1.0, 1.0))

    def test_lattice_preserved(self):
        rng = random.Random(11)
        for _ in range(300):
            b = random_basis(rng, 5.0)
            s, (a, b01, c, d) = reduction_transform(b)
            det = a * d - b01 * c
            assert det in (-1, 1)
            v1 = Vec2(a * b.v1.x + b01 * b.v2.x, a * b.v1.y + b01 * b.v2.y)
            v2 = Vec2(c * b.v1.x + d * b.v2.x, c * b.v1.y + d * b.v2.y)
            assert_triple(v1, s.v1, 1e-12)
            assert_triple(v2, s.v2, 1e-12)

    def test_superbase_sums_to_zero(self):
        rng = random.Random(13)
        for _ in range(300):
            s = reduce_to_obtuse(random_basis(rng, 2.0))
            scale = max(abs(v.x) + abs(v.y) for v in s)
            assert abs(s.v0.x + s.v1.x + s.v2.x) <= 1e-9 * scale
            assert abs(s.v0.y + s.v1.y + s.v2.y) <= 1e-9 * scale

    def test_vonorm_conorm_consistency(self):
        rng = random.Random(17)
        for _ in range(300):
            s = reduce_to_obtuse(random_basis(rng, 4.0))
            p = conorms(s)
            vn = vonorms(s)
            top = max(vn)
            assert abs(vn.vn0 - (p.p01 + p.p02)) <= 1e-9 * top
            assert abs(vn.vn1 - (p.p01 + p.p12)) <= 1e-9 * top
            assert abs(vn.vn2 - (p.p02 + p.p12)) <= 1e-9 * top

    @settings(max_examples=150, deadline=None)
    @given(
        st.tuples(
            st.floats(-50, 50), st.floats(-50, 50),
            st.floats(-50, 50), st.floats(-50, 50),
        )
    )
    def test_property_reduction(self, coords):
        x1, y1, x2, y2 = coords
        b = Basis(Vec2(x1, y1), Vec2(x2, y2))
        n1 = math.hypot(x1, y1)
        n2 = math.hypot(x2, y2)
        if n1 < 1e-6 or n2 < 1e-6 or abs(cross(b.v1, b.v2)) <= 1e-6 * n1 * n2:
            return
        s = reduce_to_obtuse(b)
        assert _all_conorms_nonneg(s)
        # Same lattice: reduced vectors have integer coordinates in b.
        det = cross(b.v1, b.v2)
        for v in (s.v1, s.v2):
            c1 = cross(v, b.v2) / det
            c2 = cross(b.v1, v) / det
            assert abs(c1 - round(c1)) < 1e-6
            assert abs(c2 - round(c2)) < 1e-6

    def test_invariant_under_unimodular_remix(self):
        rng = random.Random(23)
        for _ in range(100):
            b = random_basis(rng, 3.0)
            ri1 = sorted(conorms(reduce_to_obtuse(b)))
            m = random_unimodular(rng)
            ri2 = sorted(conorms(reduce_to_obtuse(apply_unimodular(b, m))))
            assert_triple(ri1, ri2, 1e-9)
