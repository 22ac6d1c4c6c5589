"""Brute-force references for the parallelogram solver.

Two independent oracles:

* ``brute_map`` -- float grid search over three boundary parameters plus
  cyclic coordinate-ascent refinement.  Approximates the global optimum
  and a set of local maxima from multiple starts.
* ``exhaustive_candidates`` -- small-n enumeration of unit 4-tuples, each
  solved exactly for the stationary inscribed parallelogram it can carry.

Neither shares code paths with the structural solver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .geometry import cross, fourth_corner, sub
from .peaks import (
    chasing_edges,
    chasing_units,
    corner_span,
    corner_span_general,
    locate_peak,
)
from .polygon import (
    BoundaryPoint,
    ConvexPolygon,
    back_edge,
    edge_unit,
    forw_edge,
    in_portion,
    is_edge_unit,
    unit_index,
    vertex_unit,
)


@dataclass
class OracleResult:
    best_area: float
    best_corners: tuple
    local_maxima: list = field(default_factory=list)
    resolution: int = 0
    refine_tolerance: float = 0.0


# ---------------------------------------------------------------------------
# float boundary parametrization


class _FloatPoly:
    def __init__(self, poly: ConvexPolygon):
        self.n = poly.n
        self.vx = np.array(poly._fx)
        self.vy = np.array(poly._fy)
        self.dx = np.roll(self.vx, -1) - self.vx
        self.dy = np.roll(self.vy, -1) - self.vy
        self.scale = poly.diameter_hint()

    def point(self, tau: float) -> tuple:
        tau %= self.n
        i = int(tau)
        t = tau - i
        return (self.vx[i] + t * self.dx[i], self.vy[i] + t * self.dy[i])

    def points(self, tau: np.ndarray) -> tuple:
        tau = np.mod(tau, self.n)
        i = tau.astype(int)
        t = tau - i
        return (self.vx[i] + t * self.dx[i], self.vy[i] + t * self.dy[i])

    def depth(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Min scaled inward offset over all edges (>= 0 roughly-inside)."""
        best = None
        for k in range(self.n):
            h = (x - self.vx[k]) * self.dy[k] - (y - self.vy[k]) * self.dx[k]
            h = h / math.hypot(self.dx[k], self.dy[k])
            best = h if best is None else np.minimum(best, h)
        return best


def _area_triple(x1, y1, x2, y2, x3, y3):
    return np.abs((x1 - x2) * (y3 - y2) - (y1 - y2) * (x3 - x2))


def brute_map(
    poly: ConvexPolygon,
    grid_per_unit: int = 24,
    refine_tol: float = 1e-12,
    refine_top: int = 32,
) -> OracleResult:
    """Grid-search the three boundary parameters, then refine leaders by
    cyclic coordinate ascent.  Area is never decreased by refinement."""
    if grid_per_unit < 4:
        raise ValueError("grid_per_unit must be >= 4")
    fp = _FloatPoly(poly)
    n = fp.n
    taus = np.concatenate(
        [np.arange(n, dtype=float)]
        + [np.arange(n)[:, None] + (np.arange(1, grid_per_unit) / grid_per_unit)]
    ).ravel()
    taus = np.sort(np.unique(taus))
    xs, ys = fp.points(taus)
    m = len(taus)
    tol = 1e-9 * fp.scale

    leaders: list = []  # (area, t1, t2, t3)
    minx, maxx = fp.vx.min() - tol, fp.vx.max() + tol
    miny, maxy = fp.vy.min() - tol, fp.vy.max() + tol
    for i2 in range(m):
        x2, y2 = xs[i2], ys[i2]
        ax = xs[:, None] + xs[None, :] - x2  # fourth corner grid
        ay = ys[:, None] + ys[None, :] - y2
        area = _area_triple(
            xs[:, None], ys[:, None], x2, y2, xs[None, :], ys[None, :]
        )
        mask = (ax >= minx) & (ax <= maxx) & (ay >= miny) & (ay <= maxy)
        if not mask.any():
            continue
        ii, jj = np.nonzero(mask)
        d = fp.depth(ax[ii, jj], ay[ii, jj])
        ok = d >= -tol
        if not ok.any():
            continue
        ii, jj, a = ii[ok], jj[ok], area[ii, jj][ok]
        k = np.argsort(a)[-4:]
        for idx in k:
            leaders.append((float(a[idx]), taus[ii[idx]], taus[i2], taus[jj[idx]]))

    leaders.sort(reverse=True)
    leaders = leaders[:refine_top]
    best = (0.0, None)
    maxima = []
    for a0, t1, t2, t3 in leaders:
        area, params = _refine(fp, (t1, t2, t3), refine_tol)
        corners = _corners_of(fp, params)
        maxima.append((area, corners))
        if area > best[0]:
            best = (area, corners)
    dedup = _cluster_maxima(maxima, 1e-6 * fp.scale)
    return OracleResult(
        best_area=best[0],
        best_corners=best[1],
        local_maxima=dedup,
        resolution=grid_per_unit,
        refine_tolerance=refine_tol,
    )


def _corners_of(fp: _FloatPoly, params) -> tuple:
    p1, p2, p3 = (fp.point(t) for t in params)
    p0 = (p1[0] - p2[0] + p3[0], p1[1] - p2[1] + p3[1])
    return (p0, p1, p2, p3)


def _objective(fp: _FloatPoly, params) -> float:
    (x1, y1), (x2, y2), (x3, y3) = (fp.point(t) for t in params)
    ax, ay = x1 - x2 + x3, y1 - y2 + y3
    depth = fp.depth(np.array([ax]), np.array([ay]))[0]
    area = abs((x1 - x2) * (y3 - y2) - (y1 - y2) * (x3 - x2))
    if depth >= 0:
        return area
    return area + 1e3 * fp.scale * depth  # linear penalty outside


def _golden(fun, lo: float, hi: float, iters: int = 40) -> float:
    phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = fun(c), fun(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fun(d)
    return (a + b) / 2


def _refine(fp: _FloatPoly, params, tol: float):
    params = list(params)
    cur = _objective(fp, params)
    window = 0.75
    for _ in range(200):
        for k in range(3):
            def f(t, k=k):
                trial = params.copy()
                trial[k] = t
                return _objective(fp, trial)

            params[k] = _golden(f, params[k] - window, params[k] + window) % fp.n
        nxt = _objective(fp, params)
        if nxt - cur < tol:
            cur = max(cur, nxt)
            if window < 1e-9:
                break
            window /= 3
        else:
            cur = nxt
    return cur, tuple(params)


def refine_multistart(
    poly: ConvexPolygon, starts: int = 200, seed: int = 0, tol: float = 1e-10
) -> list:
    """Local maxima found by refining `starts` random parameter triples.
    Returns [(area, corners)] clustered by corner proximity."""
    fp = _FloatPoly(poly)
    rng = np.random.default_rng(seed)
    maxima = []
    for _ in range(starts):
        params = tuple(rng.uniform(0, fp.n, size=3))
        area, p = _refine(fp, params, tol)
        if area <= tol:
            continue
        corners = _corners_of(fp, p)
        if fp.depth(np.array([c[0] for c in corners]),
                    np.array([c[1] for c in corners])).min() < -1e-7 * fp.scale:
            continue
        maxima.append((area, corners))
    return _cluster_maxima(maxima, 1e-6 * fp.scale)


def _cluster_maxima(maxima: list, radius: float) -> list:
    out: list = []
    for area, corners in sorted(maxima, reverse=True, key=lambda t: t[0]):
        dup = False
        for _, kept in out:
            if _corner_set_close(corners, kept, radius):
                dup = True
                break
        if not dup:
            out.append((area, corners))
    return out


def _corner_set_close(a, b, radius: float) -> bool:
    for rot in range(4):
        if all(
            math.hypot(a[(k + rot) % 4][0] - b[k][0], a[(k + rot) % 4][1] - b[k][1])
            <= radius
            for k in range(4)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# exact small-n candidate enumeration


def exhaustive_candidates(poly: ConvexPolygon, max_n: int = 16) -> list:
    """All inscribed non-slidable parallelograms satisfying the stationarity
    system of some clockwise unit 4-tuple.  Exact; n <= max_n only.

    Returns a list of corner 4-tuples (clockwise, starting corner arbitrary).
    """
    n = poly.n
    if n > max_n:
        raise ValueError(f"n={n} exceeds exhaustive cap {max_n}")
    out = []
    units = list(range(2 * n))
    for quad in combinations(units, 4):
        for rot in range(4):
            labeled = quad[rot:] + quad[:rot]
            sol = _solve_tuple(poly, labeled)
            if sol is not None:
                out.append(sol)
    # dedup by rotated corner tuples
    dedup = []
    seen = set()
    for corners in out:
        key = min(tuple(corners[k:] + corners[:k]) for k in range(4))
        if key not in seen:
            seen.add(key)
            dedup.append(corners)
    return dedup


def _solve_tuple(poly: ConvexPolygon, units: tuple):
    """Solve the closure + pinning + stationarity system for corners on the
    given clockwise unit cycle; None when inconsistent or infeasible."""
    n = poly.n
    known: list = [None] * 4
    free: list = []
    for k in range(4):
        u = units[k]
        if is_edge_unit(u):
            free.append(k)
        else:
            known[k] = poly.vertices[unit_index(u)]

    # pins: a corner whose neighbours are both edges sits at their peak
    for k in range(4):
        ua, ub = units[(k + 1) % 4], units[(k - 1) % 4]
        if not (is_edge_unit(ua) and is_edge_unit(ub)):
            continue
        ia, ib = unit_index(ua), unit_index(ub)
        if ia == ib or not chasing_edges(poly, ia, ib):
            continue
        bp = locate_peak(poly, ia, ib)
        if bp.unit != units[k]:
            return None
        if is_edge_unit(units[k]):
            known[k] = bp.point
            free.remove(k)
        elif known[k] != bp.point:
            return None

    # closure: A0 + A2 - A1 - A3 = 0, unknowns t_k along their edges
    cols = []
    rhs = [poly.scalar(0), poly.scalar(0)]
    for k in range(4):
        s = 1 if k % 2 == 0 else -1
        if known[k] is not None:
            rhs[0] -= s * known[k][0]
            rhs[1] -= s * known[k][1]
        else:
            i = unit_index(units[k])
            v, d = poly.vertices[i], poly.dir(i)
            rhs[0] -= s * v[0]
            rhs[1] -= s * v[1]
            cols.append((k, (s * d[0], s * d[1])))

    ts = _solve_linear_with_stationarity(poly, units, known, cols, rhs)
    if ts is None:
        return None

    corners = list(known)
    sign = poly.kernel.sign
    for (k, _), t in zip(cols, ts):
        if sign(t) <= 0 or sign(t - 1) >= 0:
            return None  # corner must be interior to its open edge
        corners[k] = poly.point_at(unit_index(units[k]), t)
    if any(c is None for c in corners):
        return None

    # clockwise, non-degenerate
    ar = cross(sub(corners[1], corners[0]), sub(corners[3], corners[0]))
    if sign(ar) >= 0:
        return None
    # corner-span membership for every corner with a defined neighbour pair
    for k in range(4):
        ua, ub = units[(k + 1) % 4], units[(k - 1) % 4]
        if ua == ub:
            return None
        try:
            if chasing_units(poly, ua, ub):
                span = corner_span(poly, ua, ub)
            elif chasing_units(poly, ub, ua):
                continue  # narrow corner: constrained via its opposite
            else:
                span = corner_span_general(poly, ua, ub)
        except Exception:
            return None
        if not in_portion(poly, BoundaryPoint(corners[k], units[k]), span):
            return None
    return tuple(corners)


def _solve_linear_with_stationarity(poly, units, known, cols, rhs):
    """Solve the 2-row closure system; leftover freedom is closed by area
    stationarity.  Returns the t-values for `cols` or None."""
    sign = poly.kernel.sign
    m = len(cols)
    if m == 0:
        return [] if sign(rhs[0]) == 0 and sign(rhs[1]) == 0 else None
    if m == 1:
        (k, d) = cols[0]
        # d * t = rhs must be consistent
        if sign(cross(d, rhs)) != 0:
            return None
        t = (rhs[0] / d[0]) if sign(d[0]) != 0 else (rhs[1] / d[1])
        return [t]
    if m == 2:
        (k1, d1), (k2, d2) = cols
        det = cross(d1, d2)
        if sign(det) == 0:
            return None
        t1 = cross(rhs, d2) / det
        t2 = cross(d1, rhs) / det
        return [t1, t2]
    if m == 3:
        # one-parameter family: t = base + s * dir; stationarize the area
        (ka, da), (kb, db), (kc, dc) = cols
        det = cross(da, db)
        if sign(det) == 0:
            return None
        # express t_a, t_b via t_c = s
        base_a = cross(rhs, db) / det
        base_b = cross(da, rhs) / det
        coef_a = -cross(dc, db) / det
        coef_b = -cross(da, dc) / det

        def corner_at(s):
            tvals = {ka: base_a + coef_a * s, kb: base_b + coef_b * s, kc: s}
            pts = list(known)
            for k, _ in cols:
                pts[k] = poly.point_at(unit_index(units[k]), tvals[k])
            return pts

        zero = poly.scalar(0)
        one = zero + 1
        p0 = corner_at(zero)
        p1 = corner_at(one)

        def area_of(pts):
            return cross(sub(pts[1], pts[0]), sub(pts[3], pts[0]))

        # area(s) is quadratic; recover from three samples
        a0 = area_of(p0)
        a1 = area_of(p1)
        a2 = area_of(corner_at(zero + 2))
        # area(s) = A s^2 + B s + C
        c_coef = a0
        a_coef = (a2 - 2 * a1 + a0) / 2
        b_coef = a1 - a0 - a_coef
        if sign(a_coef) == 0:
            return None
        s_star = -b_coef / (2 * a_coef)
        t = {
            ka: base_a + coef_a * s_star,
            kb: base_b + coef_b * s_star,
            kc: s_star,
        }
        return [t[c[0]] for c in cols]
    return None
