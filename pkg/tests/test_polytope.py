from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from okbodies.polytope import Polytope, hull


def tri():
    return hull([(0, 0), (1, 0), (0, 1)])


def square(a=1):
    return hull([(0, 0), (a, 0), (0, a), (a, a)])


class TestHull:
    def test_interior_point_removed(self):
        P = hull([(0, 0), (1, 0), (0, 1), (F(1, 2), F(1, 4))])
        assert P == tri()

    def test_degenerate_point(self):
        P = hull([(0, 0)])
        assert P.vertices == ((F(0), F(0)),)
        assert P.dim() == 0

    def test_collinear(self):
        P = hull([(0, 0, 0), (1, 1, 1), (2, 2, 2)])
        assert len(P.vertices) == 2 and P.dim() == 1

    def test_idempotent(self):
        P = hull([(0, 0), (3, 1), (1, 3), (1, 1), (0, 3)])
        assert hull(P.vertices) == P

    def test_errors(self):
        with pytest.raises(ValueError, match="empty point set"):
            hull([])
        with pytest.raises(ValueError, match="mixed"):
            hull([(0, 0), (1, 1, 1)])

    def test_curve_sections_hull(self):
        # flag valuations of the 10 degree-2 monomials on the plane, halved
        pts = [(i, j) for i in range(3) for j in range(3 - i)]
        pts = [(F(x, 2), F(y, 2)) for x, y in
               [(u1, u2) for u1, u2 in pts]]
        P = hull(pts)
        assert P == hull([(0, 0), (1, 0), (0, 1)])


class TestHRep:
    def test_square(self):
        hs = square().to_hrep()
        assert len(hs) == 4
        normals = sorted(tuple(int(c) for c in h.normal) for h in hs)
        assert normals == [(-1, 0), (0, -1), (0, 1), (1, 0)]

    def test_point_equality_pairs(self):
        hs = hull([(2, 3)]).to_hrep()
        assert len(hs) == 4  # 2n half-spaces for a point in R^2

    def test_triangle_y_le_x(self):
        P = hull([(0, 0), (1, 0), (1, 1)])
        normals = {(tuple(int(c) for c in h.normal), h.offset)
                   for h in P.to_hrep()}
        assert ((0, -1), F(0)) in normals     # y >= 0
        assert ((1, 0), F(1)) in normals      # x <= 1
        assert ((-1, 1), F(0)) in normals     # y <= x

    def test_roundtrip(self):
        for P in (tri(), square(3), hull([(0, 0, 0), (1, 0, 0), (0, 1, 0),
                                          (0, 0, 1), (1, 1, 1)])):
            assert Polytope.from_halfspaces(P.to_hrep(), P.ambient_dim) == P

    def test_normalized_primitive_sorted(self):
        hs = hull([(0, 0), (F(1, 2), 0), (0, F(1, 3))]).to_hrep()
        for h in hs:
            assert all(c.denominator == 1 for c in h.normal)
        assert list(hs) == sorted(hs, key=lambda h: (h.normal, h.offset))

    def test_unbounded_system_rejected(self):
        from okbodies.polytope import HalfSpace

        half_plane = [HalfSpace((F(1), F(0)), F(0))]
        with pytest.raises(ValueError, match="unbounded"):
            Polytope.from_halfspaces(half_plane, 2)


class TestMinkowski:
    def test_segments(self):
        assert hull([(0,), (1,)]) + hull([(0,), (2,)]) == hull([(0,), (3,)])

    def test_identity(self):
        P = hull([(0, 0), (2, 1), (1, 2)])
        assert P + hull([(0, 0)]) == P

    def test_segments_to_square(self):
        horiz = hull([(0, 0), (2, 0)])
        vert = hull([(0, 0), (0, 2)])
        assert horiz + vert == square(2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            hull([(0,)]) + hull([(0, 0)])


class TestVolume:
    def test_simplex(self):
        assert tri().volume_in_dim(2) == F(1, 2)

    def test_rectangle(self):
        P = hull([(0, 0), (3, 0), (0, 5), (3, 5)])
        assert P.volume_in_dim(2) == 15

    def test_surface_triangle(self):
        P = hull([(0, 0), (1, 0), (1, 1)])
        assert P.volume_in_dim(2) == F(1, 2)

    def test_lower_dim_zero(self):
        seg = hull([(0, 0), (1, 0)])
        assert seg.volume_in_dim(2) == 0

    def test_too_small_errors(self):
        with pytest.raises(ValueError, match="exceeds requested dimension"):
            square().volume_in_dim(1)

    def test_embedded_segment(self):
        seg = hull([(0, 0, 0), (0, 3, 0)])
        assert seg.volume_in_dim(1) == 3

    def test_point_zero_dim(self):
        assert hull([(5, 7)]).volume_in_dim(0) == 1

    def test_skew_rejected(self):
        skew = hull([(0, 0), (1, 1)])
        with pytest.raises(ValueError, match="axis-aligned"):
            skew.volume_in_dim(1)

    def test_cube_minus_corner(self):
        pts = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
        pts.remove((2, 2, 2))
        P = hull(pts)
        assert P.volume_in_dim(3) == 8 - F(4, 3)


class TestDim:
    def test_cases(self):
        assert hull([(1, 2, 3)]).dim() == 0
        assert hull([(0, 0, 0), (0, 3, 0)]).dim() == 1
        assert square(2).dim() == 2


class TestContains:
    def test_inscribed(self):
        ok, margin = square().contains(tri())
        assert ok and margin == 0

    def test_reflexive(self):
        P = hull([(0, 0), (2, 1), (1, 3)])
        assert P.contains(P) == (True, 0)

    def test_violation_margin(self):
        ok, margin = hull([(0,), (1,)]).contains(hull([(0,), (2,)]))
        assert (ok, margin) == (False, 1)

    def test_empty_cases(self):
        e = Polytope.empty(2)
        assert square().contains(e) == (True, 0)
        ok, margin = e.contains(square())
        assert not ok and margin > 0


class TestSlice:
    def test_square(self):
        assert square().slice_prefix_zero(1) == hull([(0, 0), (0, 1)])

    def test_identity(self):
        P = tri()
        assert P.slice_prefix_zero(0) is P

    def test_simplex(self):
        P = hull([(0, 0), (2, 0), (0, 2)])
        assert P.slice_prefix_zero(1) == hull([(0, 0), (0, 2)])

    def test_empty_result_flagged(self):
        P = hull([(1, 1), (2, 2)])
        S = P.slice_prefix_zero(2)
        assert S.is_empty and S.ambient_dim == 2


class TestScaleEmbed:
    def test_scale_half(self):
        assert hull([(0,), (2,)]).scale(F(1, 2)) == hull([(0,), (1,)])

    def test_scale_one_and_zero(self):
        P = tri()
        assert P.scale(1) == P
        assert P.scale(0) == hull([(0, 0)])

    def test_scale_three(self):
        assert square().scale(3) == square(3)

    def test_scale_negative(self):
        with pytest.raises(ValueError):
            tri().scale(-1)

    def test_embed(self):
        seg = hull([(0,), (2,)])
        assert seg.embed(0, 1) == hull([(0, 0), (2, 0)])
        assert seg.embed(1, 0) == hull([(0, 0), (0, 2)])
        assert hull([(0,)]).embed(0, 2) == hull([(0, 0, 0)])


class TestSerialization:
    def test_roundtrip(self):
        for P in (tri(), Polytope.empty(3), hull([(F(1, 2), F(-2, 3))])):
            assert Polytope.from_json(P.to_json()) == P

    def test_rational_strings(self):
        blob = hull([(F(1, 2),)]).to_json()
        assert '"1/2"' in blob


# -- property tests ------------------------------------------------------------

coord = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def points(dim, min_size=1, max_size=9):
    return st.lists(st.tuples(*[coord] * dim), min_size=min_size,
                    max_size=max_size)


@settings(max_examples=60, deadline=None)
@given(st.one_of(points(1), points(2), points(3)))
def test_hull_roundtrip_property(pts):
    P = hull(pts)
    assert hull(P.vertices) == P
    Q = Polytope.from_halfspaces(P.to_hrep(), P.ambient_dim)
    assert Q == P


@settings(max_examples=60, deadline=None)
@given(points(2))
def test_dual_consistency(pts):
    P = hull(pts)
    hs = P.to_hrep()
    for v in P.vertices:
        assert max((h.violation(v) for h in hs), default=F(0)) <= 0
    # a point strictly outside violates some half-space
    far = tuple(c + 100 for c in P.vertices[0])
    assert any(h.violation(far) > 0 for h in hs)


@settings(max_examples=40, deadline=None)
@given(points(2, max_size=6), points(2, max_size=6), points(2, max_size=6))
def test_minkowski_properties(a, b, c):
    P, Q, R = hull(a), hull(b), hull(c)
    assert (P + Q) + R == P + (Q + R)
    assert P + Q == Q + P
    sums = {tuple(x + y for x, y in zip(p, q))
            for p in P.vertices for q in Q.vertices}
    assert set((P + Q).vertices) <= sums


@settings(max_examples=40, deadline=None)
@given(points(2, max_size=6), points(2, max_size=6),
       st.fractions(min_value=0, max_value=3, max_denominator=3))
def test_scale_distributes(a, b, lam):
    P, Q = hull(a), hull(b)
    assert (P + Q).scale(lam) == P.scale(lam) + Q.scale(lam)


@settings(max_examples=40, deadline=None)
@given(points(2, min_size=3, max_size=8))
def test_containment_monotonicity(pts):
    P = hull(pts)
    sub = hull(pts[: max(1, len(pts) - 1)])
    ok, margin = P.contains(sub)
    assert ok and margin == 0
    k = P.dim()
    if sub.dim() == k and k == P.ambient_dim:
        assert P.volume_in_dim(k) >= sub.volume_in_dim(k)
