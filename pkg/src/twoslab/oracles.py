"""Brute-force reference solvers for desk-scale instances.

Everything here trades time for trust: exhaustive enumeration with tiny size
caps, used as ground truth by the test suite and by the ``check`` command.
None of the fast solvers call into this module.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .geom import (
    Slab,
    Solution,
    as_points,
    convex_hull,
    dedup_points,
    normal,
    normalize_orientation,
    project,
    scale_tol,
    width_exact,
)

GENERAL_CAP = 14
OFFSET_CAP = 200
PARALLEL_CAP = 12

# orientation grid resolution and declared relative accuracy of
# oracle_parallel (the one tolerance-qualified oracle)
PARALLEL_GRID = 2_000_000
PARALLEL_REL = 1e-6


# --------------------------------------------------------------------------
# general variant: exhaustive bipartitions


def _subset_width(pts: np.ndarray, idx: np.ndarray) -> float:
    if len(idx) <= 2:
        return 0.0
    return width_exact(pts[idx])[0]


def oracle_general(points) -> float:
    """Min over all bipartitions of the larger part width.

    Any covering pair of slabs assigns each point to one slab, and the
    minimal slab of each part is no wider, so scanning every bipartition is
    exact.  Point 0 is fixed in the first part to halve the enumeration.
    """
    pts = dedup_points(as_points(points))
    n = len(pts)
    if n < 2:
        raise ValueError("need at least 2 distinct points")
    if n > GENERAL_CAP:
        raise ValueError(f"oracle_general caps at {GENERAL_CAP} points")
    best = math.inf
    all_idx = np.arange(n)
    for mask in range(1 << (n - 1)):
        in_b = np.zeros(n, dtype=bool)
        m = mask
        while m:
            b = m & -m
            in_b[1 + b.bit_length() - 1] = True
            m ^= b
        w = _subset_width(pts, all_idx[~in_b])
        if w >= best:
            continue
        w = max(w, _subset_width(pts, all_idx[in_b]))
        if w < best:
            best = w
    return best


# --------------------------------------------------------------------------
# fixed-orientation variants: offset windows

# A covering slab of fixed orientation can be shrunk until both bounding
# lines touch covered points, so only windows [o_i, o_j] over the sorted
# point offsets (plus the empty slab) can be optimal.  Residuals are
# value-based: a point whose offset ties a window bound is covered by the
# (closed) slab.


def oracle_one_fixed(points, theta: float) -> float:
    """Exact one-fixed-orientation optimum by window enumeration.

    Cubic-ish; capped.  Residual widths are taken over prefix/suffix hull
    vertices to keep the inner width calls cheap.
    """
    pts = dedup_points(as_points(points))
    n = len(pts)
    if n < 1:
        raise ValueError("empty point set")
    if n > OFFSET_CAP:
        raise ValueError(f"oracle_one_fixed caps at {OFFSET_CAP} points")
    if n == 1:
        return 0.0
    offs = project(pts, theta)
    order = np.argsort(offs, kind="stable")
    spts = pts[order]
    soffs = offs[order]
    uniq = np.unique(soffs)
    k = len(uniq)
    lo_pos = np.searchsorted(soffs, uniq, side="left")
    hi_pos = np.searchsorted(soffs, uniq, side="right")
    # prefix_hulls[i] = hull vertex coordinates of spts[:i]; suffix analogue
    prefix_hulls = [np.empty((0, 2))]
    for i in range(1, n + 1):
        sub = spts[:i]
        prefix_hulls.append(sub[convex_hull(sub)])
    suffix_hulls = [np.empty((0, 2))]
    for i in range(1, n + 1):
        sub = spts[n - i:]
        suffix_hulls.append(sub[convex_hull(sub)])
    suffix_hulls.reverse()  # suffix_hulls[j] = hull of spts[j:]

    def residual_width(i: int, j: int) -> float:
        m = lo_pos[i] + (n - hi_pos[j])
        if m <= 2:
            return 0.0
        both = np.vstack((prefix_hulls[lo_pos[i]], suffix_hulls[hi_pos[j]]))
        return width_exact(both)[0]

    best = width_exact(pts)[0]  # empty-slab case
    for a in range(k):
        for b in range(a, k):
            span = float(uniq[b] - uniq[a])
            if span >= best:
                break
            w = max(span, residual_width(a, b))
            if w < best:
                best = w
    return best


def oracle_two_fixed(points, theta1: float, theta2: float) -> float:
    """Exact two-fixed-orientations optimum by window enumeration.

    Windows slide over theta1 offsets; the residual width is measured at
    theta2 via running prefix/suffix extremes, so each window is O(1).
    """
    pts = dedup_points(as_points(points))
    n = len(pts)
    if n < 1:
        raise ValueError("empty point set")
    if n > OFFSET_CAP:
        raise ValueError(f"oracle_two_fixed caps at {OFFSET_CAP} points")
    if n == 1:
        return 0.0
    offs1 = project(pts, theta1)
    offs2 = project(pts, theta2)
    order = np.argsort(offs1, kind="stable")
    soffs1 = offs1[order]
    soffs2 = offs2[order]
    uniq = np.unique(soffs1)
    k = len(uniq)
    lo_pos = np.searchsorted(soffs1, uniq, side="left")
    hi_pos = np.searchsorted(soffs1, uniq, side="right")
    inf = math.inf
    pre_min = np.concatenate(([inf], np.minimum.accumulate(soffs2)))
    pre_max = np.concatenate(([-inf], np.maximum.accumulate(soffs2)))
    suf_min = np.concatenate((np.minimum.accumulate(soffs2[::-1])[::-1], [inf]))
    suf_max = np.concatenate((np.maximum.accumulate(soffs2[::-1])[::-1], [-inf]))

    def residual_width(i: int, j: int) -> float:
        lo = min(pre_min[lo_pos[i]], suf_min[hi_pos[j]])
        hi = max(pre_max[lo_pos[i]], suf_max[hi_pos[j]])
        return max(0.0, hi - lo)

    best = float(np.ptp(offs2))  # empty-slab case
    for a in range(k):
        for b in range(a, k):
            span = float(uniq[b] - uniq[a])
            if span >= best:
                break
            w = max(span, residual_width(a, b))
            if w < best:
                best = w
    return best


# --------------------------------------------------------------------------
# parallel variant: orientation grid + refinement


def _best_parallel_split_at(pts: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Best two-interval cover width per orientation, full split scan.

    For each theta the sorted offsets are split at every index and the
    smaller max-width kept; no shortcut, so this stays an independent check
    of the fast solvers' split rule.
    """
    nrm = np.stack((-np.sin(thetas), np.cos(thetas)), axis=1)
    offs = np.sort(pts @ nrm.T, axis=0)
    n = len(pts)
    lo = offs[0]
    hi = offs[-1]
    best = hi - lo  # split after the last point: one slab covers all
    for k in range(n - 1):
        cand = np.maximum(offs[k] - lo, hi - offs[k + 1])
        np.minimum(best, cand, out=best)
    return best


def oracle_parallel(points) -> float:
    """Parallel-pair optimum by dense orientation grid plus refinement.

    Tolerance-qualified: accurate to PARALLEL_REL relative error, from a
    PARALLEL_GRID-sample sweep of [0, pi) with golden-section polish around
    the ten best samples.
    """
    pts = dedup_points(as_points(points))
    n = len(pts)
    if n < 1:
        raise ValueError("empty point set")
    if n > PARALLEL_CAP:
        raise ValueError(f"oracle_parallel caps at {PARALLEL_CAP} points")
    if n <= 2:
        return 0.0
    step = math.pi / PARALLEL_GRID
    best_vals = np.empty(PARALLEL_GRID)
    chunk = 1 << 17
    for s in range(0, PARALLEL_GRID, chunk):
        e = min(s + chunk, PARALLEL_GRID)
        thetas = np.arange(s, e) * step
        best_vals[s:e] = _best_parallel_split_at(pts, thetas)
    top = np.argpartition(best_vals, min(10, PARALLEL_GRID - 1))[:10]

    def f(theta: float) -> float:
        return float(_best_parallel_split_at(pts, np.array([theta]))[0])

    best = float(best_vals[top].min())
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    for t in top:
        a = (int(t) - 1) * step
        b = (int(t) + 1) * step
        c = b - inv_phi * (b - a)
        d = a + inv_phi * (b - a)
        fc, fd = f(c), f(d)
        for _ in range(60):
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - inv_phi * (b - a)
                fc = f(c)
            else:
                a, c, fc = c, d, fd
                d = a + inv_phi * (b - a)
                fd = f(d)
        best = min(best, fc, fd)
    return best


# --------------------------------------------------------------------------
# lower-bound gadget


def build_gadget(P) -> np.ndarray:
    """Append two distant horizontal points that force one slab onto P.

    With L the larger coordinate extent of P, the two extra points sit on a
    horizontal line a full side length below the bounding square of P, 7L
    apart and centered on it.  The one-fixed optimum at theta 0 of the
    result then equals the exact width of P.
    """
    pts = as_points(P)
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    if width_exact(pts)[0] <= 0.0:
        raise ValueError("degenerate point set")
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    L = max(xmax - xmin, ymax - ymin)
    cx = (xmin + xmax) / 2.0
    cy = (ymin + ymax) / 2.0
    yq = cy - 1.5 * L  # square bottom is cy - L/2; line sits L below it
    q = np.array([[cx - 3.5 * L, yq], [cx + 3.5 * L, yq]])
    return np.vstack((pts, q))


# --------------------------------------------------------------------------
# zero-width detection


def _off_line(pts: np.ndarray, a: np.ndarray, b: np.ndarray,
              tol: float) -> np.ndarray:
    """Mask of points farther than tol from line ab (a != b)."""
    d = np.abs((b[0] - a[0]) * (pts[:, 1] - a[1])
               - (b[1] - a[1]) * (pts[:, 0] - a[0]))
    return d > tol * math.hypot(b[0] - a[0], b[1] - a[1])


def _line_slab_through(a: np.ndarray, b: np.ndarray) -> Slab:
    theta = normalize_orientation(math.atan2(b[1] - a[1], b[0] - a[0]))
    off = float(a @ normal(theta))
    return Slab.line(theta, off)


def _zero_solution(variant: str, s1: Slab, s2: Slab, **meta) -> Solution:
    return Solution(slabs=(s1, s2), width=max(s1.width, s2.width),
                    variant=variant, mode="degenerate", epsilon=None,
                    meta=meta)


def _line_pair_witness(pts: np.ndarray, tol: float):
    """Three-candidate-line procedure for the general variant.

    Picks the first two points p, q and the first point r off their line;
    one of l_pq, l_pr, l_qr must be a zero-width slab if the optimum is 0.
    Returns a (slab, slab) witness or None.
    """
    p = pts[0]
    q = pts[1]
    rest = pts[_off_line(pts, p, q, tol)]
    if len(rest) == 0:
        s1 = _line_slab_through(p, q)
        return s1, s1
    r = rest[0]
    for a, b in ((p, q), (p, r), (q, r)):
        off = pts[_off_line(pts, a, b, tol)]
        if len(off) == 0:
            s1 = _line_slab_through(a, b)
            return s1, s1
        if len(off) == 1:
            return (_line_slab_through(a, b),
                    Slab.line(0.0, float(off[0, 1])))
        u, v = off[0], off[1]
        if not np.any(_off_line(off, u, v, tol)):
            return _line_slab_through(a, b), _line_slab_through(u, v)
    return None


def detect_zero_width(points, variant: str, theta: Optional[float] = None,
                      theta1: Optional[float] = None,
                      theta2: Optional[float] = None) -> Optional[Solution]:
    """Linear-time check whether the variant optimum is zero.

    Returns a witness Solution of two degenerate slabs when it is, else
    None.  variant is one of general / one-fixed / two-fixed / parallel;
    the fixed variants take their orientations as keywords.
    """
    pts = dedup_points(as_points(points))
    n = len(pts)
    if n == 0:
        raise ValueError("empty point set")
    tol = scale_tol(pts)
    if variant == "general":
        if n == 1:
            s = Slab.line(0.0, float(pts[0, 1]))
            return _zero_solution(variant, s, s)
        if n == 2:
            s1 = _line_slab_through(pts[0], pts[1])
            return _zero_solution(variant, s1, s1)
        hit = _line_pair_witness(pts, tol)
        if hit is not None:
            return _zero_solution(variant, *hit)
        return None
    if variant == "parallel":
        if n == 1:
            s = Slab.line(0.0, float(pts[0, 1]))
            return _zero_solution(variant, s, s)
        if n == 2:
            s1 = _line_slab_through(pts[0], pts[1])
            return _zero_solution(variant, s1, s1)
        p, q = pts[0], pts[1]
        rest = pts[_off_line(pts, p, q, tol)]
        if len(rest) == 0:
            s1 = _line_slab_through(p, q)
            return _zero_solution(variant, s1, s1)
        r = rest[0]
        for a, b in ((p, q), (p, r), (q, r)):
            s1 = _line_slab_through(a, b)
            off = pts[_off_line(pts, a, b, tol)]
            if len(off) == 0:
                return _zero_solution(variant, s1, s1)
            offs = project(off, s1.theta)
            if float(offs.max() - offs.min()) <= 2 * tol:
                s2 = Slab(s1.theta, float(offs.min()), float(offs.max()))
                return _zero_solution(variant, s1, s2)
        return None
    if variant == "one-fixed":
        if theta is None:
            raise ValueError("one-fixed needs theta")
        t = normalize_orientation(theta)
        if n == 1:
            s = Slab.line(t, float(pts[0] @ normal(t)))
            return _zero_solution(variant, s, s)
        if n == 2:
            s2 = _line_slab_through(pts[0], pts[1])
            s1 = Slab.line(t, float(pts[0] @ normal(t)))
            return _zero_solution(variant, s1, s2)
        p, q = pts[0], pts[1]
        rest = pts[_off_line(pts, p, q, tol)]
        if len(rest) == 0:
            s2 = _line_slab_through(p, q)
            s1 = Slab.line(t, float(p @ normal(t)))
            return _zero_solution(variant, s1, s2)
        r = rest[0]
        for a, b in ((p, q), (p, r), (q, r)):
            s_ab = _line_slab_through(a, b)
            off = pts[_off_line(pts, a, b, tol)]
            ab_fixed = abs(math.sin(s_ab.theta - t)) * math.hypot(
                b[0] - a[0], b[1] - a[1]) <= tol
            if ab_fixed:
                # line ab itself fits a slab of the fixed orientation:
                # leftovers may sit on any common line
                near = pts[~_off_line(pts, a, b, tol)]
                offs_ab = project(near, t)
                s1 = Slab(t, float(offs_ab.min()), float(offs_ab.max()))
                if len(off) == 0:
                    return _zero_solution(variant, s1, s_ab)
                if len(off) == 1:
                    s2 = Slab.line(0.0, float(off[0, 1]))
                    return _zero_solution(variant, s1, s2)
                u, v = off[0], off[1]
                if not np.any(_off_line(off, u, v, tol)):
                    return _zero_solution(variant, s1,
                                          _line_slab_through(u, v))
            else:
                # leftovers must sit on one line of the fixed orientation
                if len(off) == 0:
                    s1 = Slab.line(t, float(a @ normal(t)))
                    return _zero_solution(variant, s1, s_ab)
                offs = project(off, t)
                if float(offs.max() - offs.min()) <= 2 * tol:
                    s1 = Slab(t, float(offs.min()), float(offs.max()))
                    return _zero_solution(variant, s1, s_ab)
        return None
    if variant == "two-fixed":
        if theta1 is None or theta2 is None:
            raise ValueError("two-fixed needs theta1 and theta2")
        t1 = normalize_orientation(theta1)
        t2 = normalize_orientation(theta2)
        offs1 = project(pts, t1)
        if n == 1 or float(offs1.max() - offs1.min()) <= 2 * tol:
            s1 = Slab(t1, float(offs1.min()), float(offs1.max()))
            s2 = Slab.line(t2, float(pts[0] @ normal(t2)))
            return _zero_solution(variant, s1, s2)
        p = pts[0]
        q = pts[int(np.argmax(np.abs(offs1 - offs1[0])))]
        for g in (p, q):
            goff = float(g @ normal(t2))
            d2 = np.abs(project(pts, t2) - goff)
            off = pts[d2 > tol]
            if len(off) == 0:
                s2 = Slab.line(t2, goff)
                s1 = Slab.line(t1, float(p @ normal(t1)))
                return _zero_solution(variant, s1, s2)
            roffs = project(off, t1)
            if float(roffs.max() - roffs.min()) <= 2 * tol:
                s1 = Slab(t1, float(roffs.min()), float(roffs.max()))
                return _zero_solution(variant, s1, Slab.line(t2, goff))
        return None
    raise ValueError(f"unknown variant: {variant}")
