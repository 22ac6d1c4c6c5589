"""Random strictly-convex polygon generation (convex position sampling).

Coordinates come from an integer grid scaled into the unit box, so the
same polygon is exact under the rational kernel and well-conditioned in
doubles.  Samples with parallel edges or collinear triples are rejected
and redrawn; an optional minimum pairwise edge-direction separation is
enforced the same way.
"""
from __future__ import annotations

import math
import random

from .kernels import DOUBLE, Kernel, RAT, RATIONAL
from .polygon import ConvexPolygon, PolygonError, validate_polygon


class GenerationTimeout(RuntimeError):
    pass


def _chain_vectors(vals: list, rng: random.Random) -> list:
    lo, hi = vals[0], vals[-1]
    last_top, last_bot = lo, lo
    vecs = []
    for v in vals[1:-1]:
        if rng.getrandbits(1):
            vecs.append(v - last_top)
            last_top = v
        else:
            vecs.append(last_bot - v)
            last_bot = v
    vecs.append(hi - last_top)
    vecs.append(last_bot - hi)
    return vecs


def _convex_position_ints(n: int, rng: random.Random, grid: int) -> list:
    xs = sorted(rng.randrange(grid + 1) for _ in range(n))
    ys = sorted(rng.randrange(grid + 1) for _ in range(n))
    vx = _chain_vectors(xs, rng)
    vy = _chain_vectors(ys, rng)
    rng.shuffle(vy)
    vecs = sorted(zip(vx, vy), key=lambda v: math.atan2(v[1], v[0]))
    px = py = 0
    pts = []
    for dx, dy in vecs:
        pts.append((px, py))
        px += dx
        py += dy
    minx = min(p[0] for p in pts)
    miny = min(p[1] for p in pts)
    return [(x - minx, y - miny) for x, y in pts]


def _min_direction_gap(poly: ConvexPolygon) -> float:
    angs = sorted(math.atan2(float(d[1]), float(d[0])) % math.pi for d in poly.dirs)
    gaps = [b - a for a, b in zip(angs, angs[1:])]
    gaps.append(math.pi - (angs[-1] - angs[0]))
    return min(gaps)


def random_convex_polygon(
    n: int,
    seed: int,
    kernel: Kernel = RATIONAL,
    min_angle_sep: float = 0.0,
    grid: int = 10**6,
    max_rejections: int = 10**4,
) -> ConvexPolygon:
    """Seed-deterministic valid polygon with n vertices."""
    if n < 3:
        raise PolygonError("n must be >= 3")
    if min_angle_sep * n > math.pi:
        raise GenerationTimeout(
            f"cannot separate {n} edge directions by {min_angle_sep} rad"
        )
    rng = random.Random(seed)
    for _ in range(max_rejections):
        ints = _convex_position_ints(n, rng, grid)
        if len(set(ints)) != n:
            continue
        if kernel.eps == 0.0:
            pts = [(RAT(x, grid), RAT(y, grid)) for x, y in ints]
        else:
            pts = [(x / grid, y / grid) for x, y in ints]
        try:
            poly = validate_polygon(pts, kernel)
        except PolygonError:
            continue
        if min_angle_sep > 0.0 and _min_direction_gap(poly) < min_angle_sep:
            continue
        return poly
    raise GenerationTimeout(f"no valid polygon after {max_rejections} draws")
