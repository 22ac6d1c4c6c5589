"""Strictly convex polygons, boundary units and boundary arithmetic.

A polygon is stored as a clockwise cycle of vertices.  Its boundary is
partitioned into 2n *units*: the n vertices and the n open edges.  Unit
ids are ints in [0, 2n): even id 2i is vertex i, odd id 2i+1 is the open
edge from vertex i to vertex i+1.  This makes the clockwise successor of
a unit simply (u+1) % 2n.

Positions along the boundary are measured by *tau*: vertex i sits at
tau == i and a point at parameter t in (0,1) of edge i at tau == i + t.
All portion membership / ordering predicates reduce to exact cyclic
comparisons of tau values.
"""
from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

from .counters import COUNT
from .geometry import Point, cross, dot, sub
from .kernels import DOUBLE, Kernel, RATIONAL


class PolygonError(ValueError):
    pass


class NotConvex(PolygonError):
    pass


class CollinearVertices(PolygonError):
    pass


class ParallelEdges(PolygonError):
    def __init__(self, i: int, j: int):
        super().__init__(f"edges {i} and {j} are parallel")
        self.pair = (i, j)


class NotOnBoundary(PolygonError):
    pass


# ---------------------------------------------------------------------------
# unit helpers


def vertex_unit(i: int) -> int:
    return 2 * i


def edge_unit(i: int) -> int:
    return 2 * i + 1


def is_edge_unit(u: int) -> bool:
    return u & 1 == 1


def unit_index(u: int) -> int:
    return u >> 1


def unit_name(u: int) -> str:
    return ("e" if is_edge_unit(u) else "v") + str(unit_index(u))


def back_edge(n: int, u: int) -> int:
    """Index of the edge reached by an infinitesimal counter-clockwise step."""
    if is_edge_unit(u):
        return unit_index(u)
    return (unit_index(u) - 1) % n


def forw_edge(n: int, u: int) -> int:
    """Index of the edge reached by an infinitesimal clockwise step."""
    return unit_index(u)


def units_between(n: int, u_from: int, u_to: int) -> list:
    """Units of the clockwise closed interval [u_from .. u_to]."""
    m = 2 * n
    out = [u_from]
    u = u_from
    while u != u_to:
        u = (u + 1) % m
        out.append(u)
    return out


class BoundaryPoint(NamedTuple):
    point: Point
    unit: int


# ---------------------------------------------------------------------------


class ConvexPolygon:
    """Validated strictly convex clockwise polygon with pairwise-nonparallel
    edges.  Immutable by convention; derived tables are cached lazily."""

    def __init__(self, vertices: Sequence[Point], kernel: Kernel):
        self.vertices = tuple(vertices)
        self.kernel = kernel
        self.n = len(self.vertices)
        n = self.n
        self.dirs = tuple(
            sub(self.vertices[(i + 1) % n], self.vertices[i]) for i in range(n)
        )
        # float shadows used only as search hints / prefilters
        self._fx = [float(v[0]) for v in self.vertices]
        self._fy = [float(v[1]) for v in self.vertices]
        self._angles = [math.atan2(float(d[1]), float(d[0])) for d in self.dirs]
        # rotation offset so that angles are decreasing from _rot onward
        self._rot = max(range(n), key=self._angles.__getitem__)
        self._cache: dict = {}

    # -- basic accessors ----------------------------------------------------

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def edge(self, i: int) -> tuple:
        i %= self.n
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def dir(self, i: int) -> Point:
        return self.dirs[i % self.n]

    def inward(self, i: int, x: Point):
        """Positive inside the polygon relative to edge line i, 0 on it."""
        i %= self.n
        v = self.vertices[i]
        d = self.dirs[i]
        return (x[0] - v[0]) * d[1] - (x[1] - v[1]) * d[0]

    def area2(self):
        total = 0
        for i in range(self.n):
            total += cross(self.vertices[i], self.vertices[(i + 1) % self.n])
        return -total  # clockwise cycle has negative shoelace sum

    def diameter_hint(self) -> float:
        xs, ys = self._fx, self._fy
        return math.hypot(max(xs) - min(xs), max(ys) - min(ys))

    def scalar(self, v):
        return self.kernel.scalar(v)

    # -- tau coordinates ----------------------------------------------------

    def tau(self, bp: BoundaryPoint):
        """Exact boundary coordinate in [0, n)."""
        if not is_edge_unit(bp.unit):
            i = unit_index(bp.unit)
            return self.scalar(i) if self.kernel.eps else i + self.scalar(0)
        i = unit_index(bp.unit)
        v = self.vertices[i]
        d = self.dirs[i]
        t = dot(sub(bp.point, v), d) / dot(d, d)
        return i + t

    def point_at(self, i: int, t) -> Point:
        """Point at parameter t of edge i (t in [0, 1])."""
        v = self.vertices[i % self.n]
        d = self.dirs[i % self.n]
        return (v[0] + t * d[0], v[1] + t * d[1])

    def boundary_point_at(self, i: int, t) -> BoundaryPoint:
        n = self.n
        i %= n
        sign = self.kernel.sign
        if sign(t) == 0:
            return BoundaryPoint(self.vertices[i], vertex_unit(i))
        if sign(t - 1) == 0:
            return BoundaryPoint(self.vertices[(i + 1) % n], vertex_unit((i + 1) % n))
        return BoundaryPoint(self.point_at(i, t), edge_unit(i))

    # -- point location -----------------------------------------------------

    def locate(self, x: Point) -> tuple:
        """Classify x against the polygon: ('interior'|'boundary'|'exterior',
        unit or None).  O(log n) orientation tests."""
        n = self.n
        vs = self.vertices
        sign = self.kernel.sign
        v0 = vs[0]
        if self.kernel.point_eq(x, v0):
            return "boundary", vertex_unit(0)

        def side(k: int):
            COUNT.orient += 1
            return cross(sub(vs[k], v0), sub(x, v0))

        s1 = sign(side(1))
        s_last = sign(side(n - 1))
        # for a clockwise polygon interior points satisfy side(1)<0<side(n-1)
        if s1 > 0 or s_last < 0:
            return "exterior", None
        if s1 == 0:
            return self._classify_on_ray(x, 0)
        if s_last == 0:
            return self._classify_on_ray(x, n - 1)
        lo, hi = 1, n - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if sign(side(mid)) <= 0:
                lo = mid
            else:
                hi = mid
        # x in wedge (v0, v_lo, v_lo+1)
        COUNT.orient += 1
        s = sign(cross(sub(vs[(lo + 1) % n], vs[lo]), sub(x, vs[lo])))
        if s > 0:
            return "exterior", None
        if s < 0:
            return "interior", None
        return "boundary", self._unit_on_edge(lo, x)

    def _classify_on_ray(self, x: Point, k: int) -> tuple:
        """x is on the ray from v0 through v_k (k = 1 or n-1)."""
        n = self.n
        v0 = self.vertices[0]
        vk = self.vertices[k]
        d = sub(vk, v0)
        t = dot(sub(x, v0), d) / dot(d, d)
        sign = self.kernel.sign
        if sign(t) < 0 or sign(t - 1) > 0:
            return "exterior", None
        edge_idx = 0 if k == 1 else n - 1
        if k != 1:  # ray v0 -> v_{n-1} runs against edge n-1's direction
            t = 1 - t
        if sign(t) == 0:
            return "boundary", vertex_unit(edge_idx)
        if sign(t - 1) == 0:
            return "boundary", vertex_unit((edge_idx + 1) % n)
        return "boundary", edge_unit(edge_idx)

    def _unit_on_edge(self, i: int, x: Point) -> int:
        n = self.n
        v = self.vertices[i]
        d = self.dirs[i]
        t = dot(sub(x, v), d) / dot(d, d)
        sign = self.kernel.sign
        if sign(t) <= 0:
            return vertex_unit(i)
        if sign(t - 1) >= 0:
            return vertex_unit((i + 1) % n)
        return edge_unit(i)

    def unit_of(self, x: Point) -> int:
        kind, unit = self.locate(x)
        if kind != "boundary":
            raise NotOnBoundary(f"{x!r} is {kind}")
        return unit

    # -- extreme vertex / chords ---------------------------------------------

    def _angle_first_below(self, target: float) -> int:
        """First position k (in rotation order) whose edge angle drops below
        `target`; the angle sequence from _rot is strictly decreasing."""
        n = self.n
        angles = self._angles
        rot = self._rot
        top = angles[rot]
        while target > top:
            target -= 2 * math.pi
        while target <= top - 2 * math.pi:
            target += 2 * math.pi

        def a(k: int) -> float:
            v = angles[(rot + k) % n]
            return v if v <= top else v - 2 * math.pi
            # (only angles[rot] equals top; others already below)

        if a(0) < target:
            return 0
        lo, hi = 0, n  # a(lo) >= target, a(hi) < target (virtual)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if a(mid) < target:
                hi = mid
            else:
                lo = mid
        return hi

    def extreme_vertex(self, d: Point) -> int:
        """Index of the vertex maximizing dot(d, v) in O(log n).

        Float angles locate the candidate; an exact hill climb fixes any
        last-ulp error.  When d is orthogonal to an edge either endpoint may
        be returned.
        """
        n = self.n
        phi = math.atan2(float(d[1]), float(d[0]))
        k = self._angle_first_below(phi - math.pi / 2)
        return self._climb_max(d, (self._rot + k) % n)

    def _climb_max(self, d: Point, i: int) -> int:
        n = self.n
        vs = self.vertices

        def val(k):
            return dot(d, vs[k % n])

        cur = i % n
        steps = 0
        while val((cur + 1) % n) > val(cur):
            cur = (cur + 1) % n
            steps += 1
            if steps > 8:  # float hint failed badly: exact full scan
                return max(range(n), key=val)
        while val((cur - 1) % n) > val(cur):
            cur = (cur - 1) % n
            steps += 1
            if steps > 8:
                return max(range(n), key=val)
        return cur

    def chord_with_line(self, p: Point, d: Point) -> list:
        """Intersection points of the full line p + t*d with the boundary.
        Returns 0, 1 or 2 BoundaryPoints (2 for a proper chord; for a line
        containing an edge, the edge endpoints)."""
        n = self.n
        sign = self.kernel.sign
        normal = (-d[1], d[0])

        def offset(k: int):
            COUNT.orient += 1
            return cross(d, sub(self.vertices[k % n], p))

        imax = self.extreme_vertex(normal)
        imin = self.extreme_vertex((d[1], -d[0]))
        smax, smin = sign(offset(imax)), sign(offset(imin))
        if smax < 0 or smin > 0:
            return []
        if smax == 0:
            return [BoundaryPoint(self.vertices[imax], vertex_unit(imax))]
        if smin == 0:
            return [BoundaryPoint(self.vertices[imin], vertex_unit(imin))]

        out = []
        for a, b in ((imax, imin), (imin, imax)):
            # offsets are monotone along the arc a -> b (clockwise)
            length = (b - a) % n
            lo, hi = 0, length
            sa = sign(offset(a))
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if sign(offset(a + mid)) == sa:
                    lo = mid
                else:
                    hi = mid
            k = (a + lo) % n
            out.append(self._edge_line_hit(k, p, d))
        return out

    def _edge_line_hit(self, k: int, p: Point, d: Point) -> BoundaryPoint:
        """Intersection of edge k's closed segment with line (p, d)."""
        v = self.vertices[k]
        e = self.dirs[k]
        denom = cross(d, e)
        t = cross(d, sub(p, v)) / denom
        return self.boundary_point_at(k, t)

    def __repr__(self) -> str:  # pragma: no cover
        return f"ConvexPolygon(n={self.n}, kernel={self.kernel.name})"


# ---------------------------------------------------------------------------
# validation


def validate_polygon(points: Iterable, kernel: Kernel = RATIONAL) -> ConvexPolygon:
    """Validate and normalize a vertex cycle.

    Counter-clockwise input is silently reversed; collinear triples and
    parallel edge pairs are rejected.
    """
    pts = [tuple(kernel.scalar(c) for c in p) for p in points]
    if len(pts) < 3:
        raise PolygonError("need at least 3 vertices")
    if len(set(pts)) != len(pts):
        raise CollinearVertices("repeated vertex")

    n = len(pts)
    area2 = 0
    for i in range(n):
        area2 += cross(pts[i], pts[(i + 1) % n])
    if kernel.sign(area2) == 0:
        raise NotConvex("zero area")
    if kernel.sign(area2) > 0:  # counter-clockwise: reverse
        pts.reverse()

    for i in range(n):
        o = cross(
            sub(pts[(i + 1) % n], pts[i]), sub(pts[(i + 2) % n], pts[(i + 1) % n])
        )
        s = kernel.sign(o)
        if s == 0:
            raise CollinearVertices(f"vertices {i}..{(i + 2) % n} are collinear")
        if s > 0:
            raise NotConvex(f"reflex turn at vertex {(i + 1) % n}")

    # pairwise-nonparallel edges: canonicalize directions exactly
    seen: dict = {}
    for i in range(n):
        d = sub(pts[(i + 1) % n], pts[i])
        key = _canonical_direction(d)
        if key in seen:
            raise ParallelEdges(seen[key], i)
        seen[key] = i

    return ConvexPolygon(pts, kernel)


def _canonical_direction(d: Point):
    dx, dy = d
    if dy < 0 or (dy == 0 and dx < 0):
        dx, dy = -dx, -dy
    m = max(abs(dx), dy)  # > 0: zero-length edges rejected as repeated vertices
    return (dx / m, dy / m)


# ---------------------------------------------------------------------------
# portions


class BoundaryPortion(NamedTuple):
    """Clockwise directed arc [start .. end]; a single point when equal."""

    start: BoundaryPoint
    end: BoundaryPoint


def cyclic_delta(poly: ConvexPolygon, a_tau, b_tau):
    """(b - a) mod n, exact in the rational kernel."""
    n = poly.n
    d = b_tau - a_tau
    while d < 0:
        d += n
    while d >= n:
        d -= n
    return d


def in_portion(
    poly: ConvexPolygon,
    x: BoundaryPoint,
    portion: BoundaryPortion,
    closed_start: bool = True,
    closed_end: bool = True,
) -> bool:
    COUNT.portion += 1
    a = poly.tau(portion.start)
    b = poly.tau(portion.end)
    t = poly.tau(x)
    da = cyclic_delta(poly, a, t)
    db = cyclic_delta(poly, a, b)
    sign = poly.kernel.sign
    if sign(da) == 0:
        return closed_start
    if sign(da - db) == 0:
        return closed_end
    return da < db


def portion_order(poly: ConvexPolygon, portion: BoundaryPortion,
                  a: BoundaryPoint, b: BoundaryPoint) -> int:
    """-1/0/1 as a precedes/equals/follows b along the portion."""
    if not in_portion(poly, a, portion) or not in_portion(poly, b, portion):
        raise NotOnBoundary("point not in portion")
    s = poly.tau(portion.start)
    da = cyclic_delta(poly, s, poly.tau(a))
    db = cyclic_delta(poly, s, poly.tau(b))
    return poly.kernel.sign(da - db)


def portion_units(poly: ConvexPolygon, portion: BoundaryPortion) -> list:
    """Units met along the portion, in clockwise order (closed ends)."""
    n = poly.n
    u0, u1 = portion.start.unit, portion.end.unit
    if u0 == u1 and poly.kernel.point_eq(portion.start.point, portion.end.point):
        return [u0]
    return units_between(n, u0, u1)


def portion_breakpoints(poly: ConvexPolygon, portion: BoundaryPortion) -> list:
    """Polyline of the portion: start, interior vertices, end."""
    pts = [portion.start.point]
    u0, u1 = portion.start.unit, portion.end.unit
    if u0 == u1 and poly.kernel.point_eq(portion.start.point, portion.end.point):
        return pts
    n = poly.n
    # first vertex strictly after start
    i = unit_index(u0) if is_edge_unit(u0) else unit_index(u0)
    k = (i + 1) % n
    tau_s = poly.tau(portion.start)
    tau_e = poly.tau(portion.end)
    span = cyclic_delta(poly, tau_s, tau_e)
    while True:
        d = cyclic_delta(poly, tau_s, k if not poly.kernel.eps else float(k))
        if poly.kernel.sign(d) == 0 or d >= span:
            break
        pts.append(poly.vertices[k])
        k = (k + 1) % n
    pts.append(portion.end.point)
    return pts
