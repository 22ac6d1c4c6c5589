"""Planar primitives over coordinate tuples.

Points are plain ``(x, y)`` tuples whose coordinates come from one of the
two kernels; every function here is a pure expression in +,-,*,/ so it is
exact under the rational kernel.
"""
from __future__ import annotations

from typing import Sequence

Point = tuple  # (x, y)


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def mul(a: Point, k) -> Point:
    return (a[0] * k, a[1] * k)


def cross(a: Point, b: Point):
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Point, b: Point):
    return a[0] * b[0] + a[1] * b[1]


def orient(o: Point, a: Point, b: Point):
    """Twice the signed area of (o, a, b); negative for clockwise turns."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def midpoint(a: Point, b: Point) -> Point:
    return ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def fourth_corner(x1: Point, x2: Point, x3: Point) -> Point:
    """The unique point closing x1, x2, x3 into a parallelogram.

    The result x satisfies midpoint(x, x2) == midpoint(x1, x3).
    """
    return (x1[0] - x2[0] + x3[0], x1[1] - x2[1] + x3[1])


def reflect(x: Point, o: Point) -> Point:
    return (2 * o[0] - x[0], 2 * o[1] - x[1])


def scale_about(x: Point, o: Point, k) -> Point:
    return (o[0] + k * (x[0] - o[0]), o[1] + k * (x[1] - o[1]))


def line_intersection(p: Point, d: Point, q: Point, e: Point) -> Point:
    """Intersection of lines p + t*d and q + s*e (directions not parallel)."""
    denom = cross(d, e)
    t = cross(sub(q, p), e) / denom
    return (p[0] + t * d[0], p[1] + t * d[1])


def polygon_area2(points: Sequence[Point]):
    """Twice the signed shoelace area (negative when clockwise)."""
    total = 0
    m = len(points)
    for i in range(m):
        total += cross(points[i], points[(i + 1) % m])
    return total


def convex_clip(subject: Sequence[Point], clip: Sequence[Point]) -> list:
    """Sutherland-Hodgman clip of convex `subject` by convex `clip`.

    Both polygons must be counterclockwise.  Returns the (possibly empty,
    possibly degenerate) intersection polygon's vertex list.
    """
    output = list(subject)
    m = len(clip)
    for i in range(m):
        if not output:
            return []
        a, b = clip[i], clip[(i + 1) % m]
        d = sub(b, a)
        inside = [cross(d, sub(p, a)) >= 0 for p in output]
        nxt: list = []
        k = len(output)
        for j in range(k):
            p, q = output[j], output[(j + 1) % k]
            pin, qin = inside[j], inside[(j + 1) % k]
            if pin:
                nxt.append(p)
            if pin != qin:
                e = sub(q, p)
                t = cross(d, sub(a, p)) / cross(d, e)
                nxt.append((p[0] + t * e[0], p[1] + t * e[1]))
        output = dedup_ring(nxt)
    return output


def dedup_ring(points: Sequence[Point]) -> list:
    """Drop consecutive duplicates from a closed vertex ring."""
    out: list = []
    for p in points:
        if not out or p != out[-1]:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def segments_properly_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when open segments ab and cd share a point (touching excluded)."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if ((o1 > 0) != (o2 > 0)) and o1 != 0 and o2 != 0 and \
       ((o3 > 0) != (o4 > 0)) and o3 != 0 and o4 != 0:
        return True
    return False


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment ab (exact)."""
    if orient(a, b, p) != 0:
        return False
    lo_x, hi_x = (a[0], b[0]) if a[0] <= b[0] else (b[0], a[0])
    lo_y, hi_y = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
    return lo_x <= p[0] <= hi_x and lo_y <= p[1] <= hi_y
