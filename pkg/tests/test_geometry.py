"""Tests for the exact-arithmetic geometry helpers."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridrays.geometry import (
    INFINITY,
    ORIGIN,
    Cone,
    GridPoint,
    Side,
    compare_to_line,
    cone_of,
    cone_width,
    diagonal,
    grid_points_in_cone,
    intersect_diagonal,
    slope,
)

coords = st.integers(min_value=0, max_value=64)
points = st.builds(GridPoint, coords, coords).filter(lambda p: p != ORIGIN)


class TestGridPoint:
    def test_steps(self):
        p = GridPoint(3, 5)
        assert p.step_down() == GridPoint(3, 4)
        assert p.step_left() == GridPoint(2, 5)
        assert p.step_up() == GridPoint(3, 6)
        assert p.step_right() == GridPoint(4, 5)

    def test_str(self):
        assert str(GridPoint(3, 5)) == "(3, 5)"

    def test_diagonal(self):
        assert diagonal(GridPoint(3, 5)) == 8
        assert diagonal(ORIGIN) == 0


class TestSlope:
    def test_interior(self):
        assert slope(GridPoint(4, 2)) == Fraction(1, 2)

    def test_vertical_is_infinite(self):
        assert slope(GridPoint(0, 7)) is INFINITY

    def test_horizontal_is_zero(self):
        assert slope(GridPoint(7, 0)) == 0

    def test_origin_rejected(self):
        with pytest.raises(ValueError):
            slope(ORIGIN)

    def test_infinity_ordering(self):
        assert Fraction(10**9) < INFINITY
        assert INFINITY > Fraction(10**9)
        assert not (INFINITY < Fraction(3))
        assert INFINITY == INFINITY
        assert INFINITY <= INFINITY

    @given(points, points)
    def test_slope_total_order_matches_cross_product(self, p, q):
        # slope(p) < slope(q)  iff  p is strictly below the line through q.
        assert (slope(p) < slope(q)) == (p.y * q.x < q.y * p.x)


class TestIntersectDiagonal:
    def test_example(self):
        x, y = intersect_diagonal(GridPoint(2, 6), 4)
        assert (x, y) == (Fraction(1), Fraction(3))

    def test_non_integer(self):
        x, y = intersect_diagonal(GridPoint(3, 4), 5)
        assert (x, y) == (Fraction(15, 7), Fraction(20, 7))

    @given(points, st.integers(min_value=1, max_value=200))
    def test_lies_on_diagonal_and_on_ray(self, p, d):
        x, y = intersect_diagonal(p, d)
        assert x + y == d
        assert y * p.x == x * p.y  # collinear with the origin ray


class TestCompareToLine:
    def test_above(self):
        assert compare_to_line(GridPoint(1, 3), GridPoint(1, 2)) is Side.ABOVE

    def test_below(self):
        assert compare_to_line(GridPoint(2, 2), GridPoint(1, 2)) is Side.BELOW

    def test_on_line_counts_as_below(self):
        assert compare_to_line(GridPoint(2, 4), GridPoint(1, 2)) is Side.BELOW


class TestCones:
    def test_cone_of_extreme_slopes(self):
        pts = [GridPoint(1, 3), GridPoint(2, 2), GridPoint(1, 2)]
        assert cone_of(pts) == Cone(top=Fraction(3), bottom=Fraction(1))

    def test_cone_of_single_point(self):
        cone = cone_of([GridPoint(2, 3)])
        assert cone.top == cone.bottom == Fraction(3, 2)

    def test_cone_of_vertical_edge(self):
        cone = cone_of([GridPoint(0, 2), GridPoint(1, 1)])
        assert cone.top is INFINITY
        assert cone.bottom == Fraction(1)

    def test_cone_of_empty_rejected(self):
        with pytest.raises(ValueError):
            cone_of([])

    def test_width_example(self):
        assert cone_width([GridPoint(1, 2), GridPoint(1, 1)], 6) == Fraction(1)

    def test_width_of_degenerate_cone_is_zero(self):
        assert cone_width([GridPoint(2, 3)], 10) == 0

    def test_grid_points_example(self):
        # x ranges over [2, 3] on diagonal 6 between slopes 2 and 1.
        assert grid_points_in_cone([GridPoint(1, 2), GridPoint(1, 1)], 6) == 2

    def test_grid_points_between_two_rays(self):
        # Lines through (2,2) and (3,1) cross diagonal 6 at x = 3 and x = 4.5.
        assert grid_points_in_cone([GridPoint(2, 2), GridPoint(3, 1)], 6) == 2

    def test_grid_points_spanning_set(self):
        assert grid_points_in_cone([GridPoint(1, 3), GridPoint(3, 1)], 4) == 3

    def test_grid_points_singleton(self):
        assert grid_points_in_cone([GridPoint(2, 2)], 4) == 1
        assert grid_points_in_cone([GridPoint(2, 3)], 5) == 1

    def test_grid_points_can_be_zero(self):
        # A thin cone near the diagonal's gaps may trap no lattice point.
        assert grid_points_in_cone([GridPoint(1, 4), GridPoint(1, 3)], 1) == 0

    @given(st.lists(points, min_size=1, max_size=8), st.integers(min_value=1, max_value=128))
    def test_count_matches_brute_force(self, pts, d):
        cone = cone_of(pts)
        expected = sum(
            1
            for x in range(d + 1)
            if cone.bottom <= slope(GridPoint(x, d - x)) <= cone.top
        )
        assert grid_points_in_cone(pts, d) == expected

    @given(st.lists(points, min_size=1, max_size=8), st.integers(min_value=1, max_value=128))
    def test_count_close_to_width(self, pts, d):
        floor_width = int(cone_width(pts, d))
        count = grid_points_in_cone(pts, d)
        assert count in (floor_width, floor_width + 1)
