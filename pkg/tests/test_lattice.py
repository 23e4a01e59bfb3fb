import random
from fractions import Fraction

import pytest

from toric_diamond.errors import DegenerateInput, UnboundedRegion
from toric_diamond.lattice import (
    ConvexLatticePolygon,
    HalfPlane,
    UnimodularMap,
    convex_hull,
    cross,
    half_plane_intersection,
    lattice_span_index,
    mat_mul,
    shoelace_area,
    smith_normal_form,
    span_basis,
    unimodular_inverse,
)


def test_cross_examples():
    assert cross((1, 0), (0, 1)) == 1
    assert cross((1, 1), (5, 2)) == -3
    assert cross((2, 4), (1, 2)) == 0


class TestConvexHull:
    def test_square(self):
        hull = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(hull) == 4
        assert hull[0] == (0, 0)

    def test_interior_point_dropped(self):
        hull = convex_hull([(1, 0), (0, 1), (-1, -1), (0, 0)])
        assert set(hull) == {(1, 0), (0, 1), (-1, -1)}

    def test_edge_point_dropped(self):
        # (1,1) is not a vertex of the hull of these three
        hull = convex_hull([(3, 0), (1, 1), (0, 3), (0, 0)])
        assert (1, 1) not in hull

    def test_collinear_raises(self):
        with pytest.raises(DegenerateInput):
            convex_hull([(0, 0), (1, 1), (2, 2)])

    def test_permutation_invariance(self):
        pts = [(0, 0), (3, 1), (2, 4), (-1, 2), (1, 1)]
        base = convex_hull(pts)
        rng = random.Random(1)
        for _ in range(10):
            rng.shuffle(pts)
            assert convex_hull(pts) == base


def test_shoelace_examples():
    assert shoelace_area([(-1, -1), (2, -1), (-1, 2)]) == Fraction(9, 2)
    assert shoelace_area([(1, 1), (-1, 1), (-1, -1), (1, -1)]) == 4
    hexagon = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
    assert shoelace_area(hexagon) == 3


def test_shoelace_unimodular_invariance():
    hexagon = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
    g = UnimodularMap(2, 1, 1, 1)
    assert shoelace_area([g.apply(v) for v in hexagon]) == 3


class TestHalfPlaneIntersection:
    def test_cp2_triangle(self):
        verts = half_plane_intersection(
            [((1, 0), -1), ((0, 1), -1), ((-1, -1), -1)])
        assert set(verts) == {(-1, -1), (2, -1), (-1, 2)}

    def test_square(self):
        verts = half_plane_intersection(
            [((1, 0), -1), ((-1, 0), -1), ((0, 1), -1), ((0, -1), -1)])
        assert set(verts) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}

    def test_unbounded(self):
        with pytest.raises(UnboundedRegion):
            half_plane_intersection([((1, 0), 0), ((0, 1), 0), ((1, 1), 0)])

    def test_empty(self):
        assert half_plane_intersection(
            [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)]) == []

    def test_rational_vertices(self):
        verts = half_plane_intersection(
            [((2, 1), -1), ((-1, 0), -1), ((0, -1), -1)])
        assert all(isinstance(v[0], Fraction) or v[0] == int(v[0]) for v in verts)
        # supporting half-planes of the output reproduce the input region
        area = shoelace_area(verts)
        assert area > 0


class TestSmithNormalForm:
    def check(self, A):
        snf = smith_normal_form(A)
        # U*A*V = D exactly
        assert mat_mul(mat_mul([list(r) for r in snf.U], A),
                       [list(r) for r in snf.V]) == [list(r) for r in snf.D]
        fac = snf.invariant_factors
        for i in range(len(fac) - 1):
            assert fac[i + 1] % fac[i] == 0
        return snf

    def test_examples(self):
        assert self.check([[1, 0], [0, 1]]).invariant_factors == (1, 1)
        assert self.check([[1, 1], [5, 2]]).invariant_factors == (1, 3)
        assert self.check([[2, 0], [0, 4]]).invariant_factors == (2, 4)

    def test_random_reconstruction(self):
        rng = random.Random(7)
        for _ in range(300):
            m = rng.randint(1, 3)
            n = rng.randint(1, 4)
            A = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(m)]
            self.check(A)

    def test_unimodularity(self):
        snf = smith_normal_form([[4, 6, 2], [2, 8, 10]])
        for M in (snf.U, snf.V):
            inv = unimodular_inverse([list(r) for r in M])
            n = len(M)
            assert mat_mul(inv, [list(r) for r in M]) == \
                [[int(i == j) for j in range(n)] for i in range(n)]


def test_lattice_span_index():
    assert lattice_span_index([(1, 0), (0, 1)]) == 1
    assert lattice_span_index([(1, 1), (1, -1)]) == 2
    assert lattice_span_index([(2, 0)]) == 0


def test_lattice_span_index_gl2_invariance():
    rng = random.Random(3)
    vecs = [(2, 0), (0, 3), (4, 6)]
    base = lattice_span_index(vecs)
    for _ in range(10):
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            if abs(a * d - b * c) == 1:
                break
        g = UnimodularMap(a, b, c, d)
        assert lattice_span_index([g.apply(v) for v in vecs]) == base


def test_span_basis_membership():
    vecs = [(-7, -4), (-5, -4), (-1, -2), (5, 2), (7, 4)]
    b1, b2 = span_basis(vecs)
    det = cross(b1, b2)
    assert abs(det) == lattice_span_index(vecs)
    for v in vecs:
        assert cross(v, b2) % det == 0 and cross(b1, v) % det == 0


def test_polygon_requires_strict_convexity():
    with pytest.raises(DegenerateInput):
        ConvexLatticePolygon.from_vertices([(0, 0), (2, 0), (1, 0), (0, 2)])


def test_polygon_origin_interior():
    p = ConvexLatticePolygon.from_vertices([(1, 1), (-1, 1), (-1, -1), (1, -1)])
    assert p.origin_interior()
    q = ConvexLatticePolygon.from_vertices([(1, 1), (3, 1), (3, 3), (1, 3)])
    assert not q.origin_interior()
