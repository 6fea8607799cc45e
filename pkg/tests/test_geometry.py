from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from annular_tangles.errors import GeometryDegenerate
from annular_tangles.geometry import GRID48, GRID64, point_in_polygon, polylines_touch, pt


def test_square_circle_points():
    assert pt(F(2), F(0)) == (2, 0)
    assert pt(F(2), F(1, 8)) == (2, 2)
    assert pt(F(2), F(1, 4)) == (0, 2)
    assert pt(F(1), F(1, 2)) == (-1, 0)
    assert pt(F(1), F(3, 4)) == (0, -1)
    assert pt(F(1), F(1)) == pt(F(1), F(0))


@given(st.fractions(min_value=0, max_value=1), st.fractions(min_value=F(1, 2), max_value=5))
def test_points_lie_on_the_square(theta, rho):
    x, y = pt(rho, theta)
    assert max(abs(x), abs(y)) == rho


def test_arc_hits_corners():
    pts = GRID64.arc(F(1), F(0), F(1, 2))
    assert (F(1), F(1)) in pts and (F(-1), F(1)) in pts
    assert pts[0] == (1, 0) and pts[-1] == (-1, 0)
    assert GRID48.arc(F(1), F(1, 10), F(1, 10)) == [pt(F(1), F(1, 10))] * 2


def test_point_in_polygon():
    square = [(F(0), F(0)), (F(2), F(0)), (F(2), F(2)), (F(0), F(2))]
    assert point_in_polygon((F(1), F(1)), square)
    assert not point_in_polygon((F(3), F(1)), square)
    with pytest.raises(GeometryDegenerate):
        point_in_polygon((F(2), F(1)), square)


def test_touching_segments():
    a = [(F(0), F(0)), (F(2), F(2))]
    b = [(F(0), F(2)), (F(2), F(0))]
    c = [(F(3), F(3)), (F(4), F(4))]
    assert polylines_touch(a, b, closed=False)
    assert not polylines_touch(a, c, closed=False)
