"""Distance-product peaks on the boundary.

For a chasing pair of edges (i, j) the product of distances to their two
support lines has a unique maximizer over the polygon, always a boundary
point ("peak").  Peaks drive everything else: corner spans, block shapes,
sector shapes and the location queries.

Edge i is *chasing* edge j when the support lines of i and j meet
clockwise-between them; with direction vectors this is simply
cross(dir_j, dir_i) > 0, so chasing over edges is a strict tournament.
"""
from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .counters import COUNT
from .geometry import cross, line_intersection, midpoint, sub
from .kernels import RAT
from .polygon import (
    BoundaryPoint,
    BoundaryPortion,
    ConvexPolygon,
    PolygonError,
    back_edge,
    edge_unit,
    forw_edge,
    is_edge_unit,
    unit_index,
    vertex_unit,
)


class NotChasing(PolygonError):
    pass


class HintMismatch(PolygonError):
    pass


class UnsortedInput(PolygonError):
    pass


class Peak(NamedTuple):
    i: int
    j: int
    location: BoundaryPoint


# ---------------------------------------------------------------------------
# chasing


def chasing_edges(poly: ConvexPolygon, i: int, j: int) -> bool:
    """Edge i chasing edge j: their support lines meet clockwise-between."""
    if i == j:
        raise PolygonError("chasing needs distinct edges")
    COUNT.orient += 1
    return poly.kernel.sign(cross(poly.dir(j), poly.dir(i))) > 0


def chasing_le(poly: ConvexPolygon, i: int, j: int) -> bool:
    """i == j or edge i chasing edge j."""
    return i % poly.n == j % poly.n or chasing_edges(poly, i, j)


def chasing_units(poly: ConvexPolygon, u: int, u2: int) -> bool:
    if u == u2:
        raise PolygonError("chasing needs distinct units")
    n = poly.n
    bu, bu2 = back_edge(n, u), back_edge(n, u2)
    fu, fu2 = forw_edge(n, u), forw_edge(n, u2)
    if bu == bu2 or fu == fu2:
        return False
    return chasing_edges(poly, bu, bu2) and chasing_edges(poly, fu, fu2)


def far_vertex_table(poly: ConvexPolygon) -> list:
    """For each edge, the index of the unique farthest vertex (O(n))."""
    tab = poly._cache.get("far_vertex")
    if tab is not None:
        return tab
    n = poly.n
    cur = max(range(n), key=lambda k: poly.inward(0, poly.vertices[k]))
    tab = []
    for i in range(n):
        while poly.inward(i, poly.vertices[(cur + 1) % n]) > poly.inward(
            i, poly.vertices[cur]
        ):
            cur = (cur + 1) % n
        tab.append(cur)
    poly._cache["far_vertex"] = tab
    return tab


def chasing_last(poly: ConvexPolygon, i: int) -> int:
    """Last edge (clockwise) chased by edge i: back edge of its far vertex."""
    return (far_vertex_table(poly)[i % poly.n] - 1) % poly.n


# ---------------------------------------------------------------------------
# distance product


def _perfect_sqrt(q):
    """Exact rational square root of q, or None."""
    try:
        num, den = q.numerator, q.denominator
    except AttributeError:
        return None
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return RAT(rn, rd)
    return None


def distance_product(poly: ConvexPolygon, x, i: int, j: int):
    """d(x, line_i) * d(x, line_j).

    Exact (rational kernel) when both edge lengths are rational, otherwise
    a float; sign-free quantities for predicates use inward() directly.
    """
    hi = abs(poly.inward(i, x))
    hj = abs(poly.inward(j, x))
    di, dj = poly.dir(i), poly.dir(j)
    n2i = di[0] * di[0] + di[1] * di[1]
    n2j = dj[0] * dj[0] + dj[1] * dj[1]
    if poly.kernel.eps == 0.0:
        ri, rj = _perfect_sqrt(RAT(n2i)), _perfect_sqrt(RAT(n2j))
        if ri is not None and rj is not None:
            return (hi * hj) / (ri * rj)
    return float(hi) * float(hj) / math.sqrt(float(n2i) * float(n2j))


# ---------------------------------------------------------------------------
# peak location


def peak_in_unit(poly: ConvexPolygon, i: int, j: int, unit: int) -> BoundaryPoint:
    """Peak of the chasing pair (i, j) given its containing unit (O(1))."""
    if not is_edge_unit(unit):
        k = unit_index(unit)
        if classify_peak(poly, i, j, k) != 0:
            raise HintMismatch(f"peak({i},{j}) is not at vertex {k}")
        return BoundaryPoint(poly.vertices[k], unit)
    k = unit_index(unit)
    vi, vk = poly.vertices[i % poly.n], poly.vertices[k]
    vj = poly.vertices[j % poly.n]
    a = line_intersection(vi, poly.dir(i), vk, poly.dir(k))
    b = line_intersection(vj, poly.dir(j), vk, poly.dir(k))
    p = midpoint(a, b)
    d = poly.dir(k)
    t = (sub(p, vk)[0] * d[0] + sub(p, vk)[1] * d[1]) / (d[0] ** 2 + d[1] ** 2)
    if not (0 < t < 1):
        raise HintMismatch(f"peak({i},{j}) not inside edge {k}")
    return BoundaryPoint(p, unit)


def _disprod_derivative(poly: ConvexPolygon, i: int, j: int, x, d):
    """Directional derivative of inward_i * inward_j at x along d."""
    hi, hj = poly.inward(i, x), poly.inward(j, x)
    return cross(d, poly.dir(i)) * hj + hi * cross(d, poly.dir(j))


def classify_peak(poly: ConvexPolygon, i: int, j: int, k: int) -> int:
    """Position of peak(i, j) relative to vertex k on the far arc:
    -1 strictly before (clockwise-earlier), 0 at vertex k, +1 strictly after.

    Decided from one-sided derivatives of the distance product along the
    two incident edges; exact under the rational kernel.
    """
    COUNT.classify += 1
    n = poly.n
    vk = poly.vertices[k % n]
    sign = poly.kernel.sign
    right = sign(_disprod_derivative(poly, i, j, vk, poly.dir(k)))
    if right > 0:
        return 1
    left = sign(_disprod_derivative(poly, i, j, vk, poly.dir((k - 1) % n)))
    if left < 0:
        return -1
    return 0


def classify_peak_at(poly: ConvexPolygon, i: int, j: int, bp: BoundaryPoint) -> int:
    """Like classify_peak but against an arbitrary boundary point."""
    if not is_edge_unit(bp.unit):
        return classify_peak(poly, i, j, unit_index(bp.unit))
    COUNT.classify += 1
    k = unit_index(bp.unit)
    s = poly.kernel.sign(_disprod_derivative(poly, i, j, bp.point, poly.dir(k)))
    return 1 if s > 0 else -1 if s < 0 else 0


def locate_peak(poly: ConvexPolygon, i: int, j: int) -> BoundaryPoint:
    """Peak of chasing pair (i, j) with its containing unit, O(log n)."""
    n = poly.n
    i %= n
    j %= n
    cache = poly._cache.get("peaks")
    if cache is not None and (i, j) in cache:
        return cache[(i, j)]
    m = (i - j - 2) % n  # number of vertices strictly inside the far arc
    if m == 0:
        bp = peak_in_unit(poly, i, j, edge_unit((j + 1) % n))
    else:
        # vertices (j+2) .. (j+1+m); classifications go 'after'* ('at'|'before'*)
        lo, hi = 0, m + 1  # offsets into the arc, 1-based; hi: virtual stop
        at = None
        while hi - lo > 1:
            mid = (lo + hi) // 2
            c = classify_peak(poly, i, j, (j + 1 + mid) % n)
            if c > 0:
                lo = mid
            elif c == 0:
                at = mid
                break
            else:
                hi = mid
        if at is not None:
            k = (j + 1 + at) % n
            bp = BoundaryPoint(poly.vertices[k], vertex_unit(k))
        else:
            # peak strictly between offset lo and hi
            bp = peak_in_unit(poly, i, j, edge_unit((j + 1 + lo) % n))
    if cache is not None:
        cache[(i, j)] = bp
    return bp


def peak(poly: ConvexPolygon, i: int, j: int) -> Peak:
    if not chasing_edges(poly, i, j):
        raise NotChasing(f"edge {i} does not chase edge {j}")
    return Peak(i % poly.n, j % poly.n, locate_peak(poly, i, j))


def _check_cyclic_sorted(n: int, seq: Sequence[int]) -> None:
    if len(seq) < 2:
        return
    base = seq[0]
    prev = 0
    for v in seq[1:]:
        d = (v - base) % n
        if d < prev:
            raise UnsortedInput("indices not in clockwise order")
        prev = d


def batch_peaks(poly: ConvexPolygon, pairs: Sequence[tuple]) -> list:
    """Peaks for chasing pairs whose first and second coordinates are each in
    clockwise order; classify() work is O(len(pairs) + n) amortized."""
    n = poly.n
    _check_cyclic_sorted(n, [a for a, _ in pairs])
    _check_cyclic_sorted(n, [b for _, b in pairs])
    out = []
    cursor = None
    for a, b in pairs:
        a %= n
        b %= n
        m = (a - b - 2) % n
        if m == 0:
            out.append(peak_in_unit(poly, a, b, edge_unit((b + 1) % n)))
            continue
        first = (b + 2) % n
        if cursor is None or (cursor - first) % n >= m:
            cursor = first
        while True:
            c = classify_peak(poly, a, b, cursor)
            if c == 0:
                out.append(BoundaryPoint(poly.vertices[cursor], vertex_unit(cursor)))
                break
            if c < 0:
                out.append(peak_in_unit(poly, a, b, edge_unit((cursor - 1) % n)))
                break
            if (cursor - first) % n == m - 1:  # last interior vertex
                out.append(peak_in_unit(poly, a, b, edge_unit((a - 1) % n)))
                break
            cursor = (cursor + 1) % n
    return out


def all_peaks(poly: ConvexPolygon) -> dict:
    """Locate every peak; cached on the polygon.  O(n^2) classify work."""
    cache = poly._cache.get("peaks_all")
    if cache is not None:
        return cache
    n = poly.n
    table: dict = {}
    for i in range(n):
        last = chasing_last(poly, i)
        count = (last - i) % n
        row = [(i, (i + 1 + d) % n) for d in range(count)]
        # per-row second coordinates ascend; run the batch walk on the row
        locs = _row_peaks(poly, row)
        for (a, b), bp in zip(row, locs):
            table[(a, b)] = bp
    poly._cache["peaks_all"] = table
    poly._cache["peaks"] = dict(table)
    return table


def _row_peaks(poly: ConvexPolygon, row: list) -> list:
    n = poly.n
    out = []
    cursor = None
    for a, b in row:
        m = (a - b - 2) % n
        if m == 0:
            out.append(peak_in_unit(poly, a, b, edge_unit((b + 1) % n)))
            continue
        first = (b + 2) % n
        if cursor is None or (cursor - first) % n >= m:
            cursor = first
        while True:
            c = classify_peak(poly, a, b, cursor)
            if c == 0:
                out.append(BoundaryPoint(poly.vertices[cursor], vertex_unit(cursor)))
                break
            if c < 0:
                out.append(peak_in_unit(poly, a, b, edge_unit((cursor - 1) % n)))
                break
            if (cursor - first) % n == m - 1:
                out.append(peak_in_unit(poly, a, b, edge_unit((a - 1) % n)))
                break
            cursor = (cursor + 1) % n
    return out


# ---------------------------------------------------------------------------
# corner spans


def corner_span(poly: ConvexPolygon, u: int, u2: int) -> BoundaryPortion:
    """Boundary span admissible for a corner whose clockwise-previous corner
    is on u2 and next corner on u; requires u chasing u2.  Shrinks to one
    point when both units are edges."""
    if not chasing_units(poly, u, u2):
        raise NotChasing(f"{u} does not chase {u2}")
    n = poly.n
    start = locate_peak(poly, back_edge(n, u), back_edge(n, u2))
    end = locate_peak(poly, forw_edge(n, u), forw_edge(n, u2))
    return BoundaryPortion(start, end)


def corner_span_general(poly: ConvexPolygon, u: int, u2: int) -> BoundaryPortion:
    """corner_span extended to any distinct unit pair via farthest vertices."""
    if u == u2:
        raise PolygonError("need distinct units")
    n = poly.n
    fv = far_vertex_table(poly)
    a = back_edge(n, u)
    if a != back_edge(n, u2) and chasing_edges(poly, a, back_edge(n, u2)):
        a2 = back_edge(n, u2)
    else:
        a2 = (fv[a] - 1) % n  # back edge of the far vertex of a
    b2 = forw_edge(n, u2)
    if forw_edge(n, u) != b2 and chasing_edges(poly, forw_edge(n, u), b2):
        b = forw_edge(n, u)
    else:
        b = fv[b2] % n  # forward edge of the far vertex of b2
    return BoundaryPortion(locate_peak(poly, a, a2), locate_peak(poly, b, b2))
