"""Exact rational polylines in the annulus.

Circles are replaced by axis-aligned squares ("square circles") so that every
point at a rational radius and a rational angle has rational coordinates.  The
angle ``theta`` is measured in turns; ``pt(rho, theta)`` moves along the square
of half-width ``rho`` and is linear in ``rho``, so fixed-angle paths are
straight rays from the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GeometryDegenerate

Point = tuple[Fraction, Fraction]


def pt(rho: Fraction, theta: Fraction) -> Point:
    t = (Fraction(theta) % 1) * 8
    if t >= 7:
        t -= 8
    rho = Fraction(rho)
    if t < 1:
        return (rho, rho * t)
    if t < 3:
        return (rho * (2 - t), rho)
    if t < 5:
        return (-rho, rho * (4 - t))
    return (rho * (t - 6), -rho)


@dataclass(frozen=True)
class Router:
    """Angular grid and radial step used to realize arcs."""

    name: str
    grid: int
    delta_offset: int

    def delta(self, n: int) -> Fraction:
        return Fraction(1, n + self.delta_offset)

    def arc(self, rho: Fraction, start: Fraction, stop: Fraction) -> list[Point]:
        """Anticlockwise path along the square of radius ``rho`` from ``start`` to ``stop``.

        ``stop`` may exceed ``start`` by up to one turn.  Every grid angle strictly
        in between becomes a vertex; the grid contains the square's corners.
        """
        if stop < start:
            raise ValueError("arc must run anticlockwise")
        pts = [pt(rho, start)]
        k = (start * self.grid).__floor__() + 1
        while Fraction(k, self.grid) < stop:
            pts.append(pt(rho, Fraction(k, self.grid)))
            k += 1
        pts.append(pt(rho, stop))
        return pts


GRID64 = Router("grid64", 64, 2)
GRID48 = Router("grid48", 48, 3)
ROUTERS = {r.name: r for r in (GRID64, GRID48)}


def cup_polyline(router: Router, glue: Fraction, sign: int, height: int, n: int,
                 minus: int, plus: int, size: int) -> list[Point]:
    """Cup hanging off the square of radius ``glue`` towards ``sign``.

    The arc leaves the glue circle at ``minus``, runs anticlockwise at radius
    ``glue + sign*height*delta`` and returns at ``plus``.
    """
    a = Fraction(minus, size)
    b = a + Fraction((plus - minus) % size, size)
    rho = glue + sign * height * router.delta(n)
    return [pt(glue, a)] + router.arc(rho, a, b) + [pt(glue, b)]


def radial_polyline(r_from: Fraction, r_to: Fraction, theta: Fraction) -> list[Point]:
    return [pt(r_from, theta), pt(r_to, theta)]


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    (px, py), (ax, ay), (bx, by) = p, a, b
    if (bx - ax) * (py - ay) - (by - ay) * (px - ax) != 0:
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def point_in_polygon(p: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test; a point on the boundary raises GeometryDegenerate."""
    px, py = p
    inside = False
    k = len(poly)
    for i in range(k):
        a, b = poly[i], poly[(i + 1) % k]
        if _on_segment(p, a, b):
            raise GeometryDegenerate(f"point {p} lies on the polygon boundary")
        (ax, ay), (bx, by) = a, b
        if (ay > py) != (by > py):
            x = ax + (py - ay) * (bx - ax) / (by - ay)
            if x > px:
                inside = not inside
    return inside


def _segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    def orient(p, q, r):
        v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        return (v > 0) - (v < 0)

    o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and _on_segment(c, a, b))
        or (o2 == 0 and _on_segment(d, a, b))
        or (o3 == 0 and _on_segment(a, c, d))
        or (o4 == 0 and _on_segment(b, c, d))
    )


def polylines_touch(p: Sequence[Point], q: Sequence[Point], closed: bool = True) -> bool:
    """Whether two polylines share a point (quadratic; for checks, not hot paths)."""
    def segs(poly):
        k = len(poly)
        stop = k if closed else k - 1
        return [(poly[i], poly[(i + 1) % k]) for i in range(stop)]

    return any(_segments_touch(a, b, c, d) for a, b in segs(p) for c, d in segs(q))
