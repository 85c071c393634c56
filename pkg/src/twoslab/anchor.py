"""Constant-factor seed for the general solver.

Builds a small set of candidate point pairs (one of which is guaranteed to
sit inside one slab of some optimal pair, far apart relative to that slab's
point set), then binary-searches slab widths centered on the candidate line,
using the streaming width sketch to price the leftover points.  The best
result over all candidates is a 10-approximation of the optimum.
"""

from __future__ import annotations

import math
from typing import List, Tuple

import numpy as np

from .geom import (
    Slab,
    Solution,
    as_points,
    convex_hull,
    dedup_points,
    diameter_2approx,
    normal,
    normalize_orientation,
    point_in_hull,
)
from .oracles import detect_zero_width
from .stream import WidthSketch


# --------------------------------------------------------------------------
# inner tangents


def _roll_lowest(V: np.ndarray) -> np.ndarray:
    k = min(range(len(V)), key=lambda i: (V[i, 1], V[i, 0]))
    return np.roll(V, -k, axis=0)


def _mink_sum_vertices(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Vertex cycle of the Minkowski sum of two convex CCW polygons.

    Standard edge merge by polar angle from the lowest-leftmost start; the
    output may keep collinear vertices, which is fine for extreme-angle
    scans.  Degenerate polygons (1 or 2 vertices) are handled as cycles.
    """
    if len(A) == 1:
        return A[0] + B
    if len(B) == 1:
        return B[0] + A
    A = _roll_lowest(A)
    B = _roll_lowest(B)
    n, m = len(A), len(B)
    out = []
    i = j = 0
    while i < n or j < m:
        out.append(A[i % n] + B[j % m])
        if i >= n:
            j += 1
            continue
        if j >= m:
            i += 1
            continue
        ea = A[(i + 1) % n] - A[i % n]
        eb = B[(j + 1) % m] - B[j % m]
        cr = ea[0] * eb[1] - ea[1] * eb[0]
        if cr > 0:
            i += 1
        elif cr < 0:
            j += 1
        else:
            i += 1
            j += 1
    return np.array(out)


def inner_tangent_extremes(P, Q) -> Tuple[int, int, int, int]:
    """Tangent points of the two inner common tangents of conv(P), conv(Q).

    Returns indices (p1, p2, q1, q2) into P and Q: the first tangent line
    passes through P[p1] and Q[q1], the second through P[p2] and Q[q2].
    A line through the origin touches the difference polygon conv(P) +
    (-conv(Q)) exactly when it is an inner tangent direction, so the two
    tangents are the extreme vertex angles of that polygon seen from the
    origin.  Raises if the hulls are not separable.
    """
    P = as_points(P)
    Q = as_points(Q)
    if len(P) == 0 or len(Q) == 0:
        raise ValueError("empty point set")
    A = P[convex_hull(P)]
    B = -Q[convex_hull(Q)]
    M = _mink_sum_vertices(A, B)
    if np.any((M[:, 0] == 0) & (M[:, 1] == 0)):
        raise ValueError("point sets are not separable")
    if point_in_hull(np.zeros((1, 2)), M[convex_hull(M)])[0]:
        raise ValueError("point sets are not separable")
    c = M.mean(axis=0)
    base = math.atan2(c[1], c[0])
    ang = np.arctan2(M[:, 1], M[:, 0]) - base
    ang = np.mod(ang + math.pi, 2 * math.pi) - math.pi
    picks = []
    for v in (M[int(np.argmin(ang))], M[int(np.argmax(ang))]):
        norm_v = math.hypot(v[0], v[1])
        nx, ny = -v[1] / norm_v, v[0] / norm_v
        dots = M[:, 0] * nx + M[:, 1] * ny
        if float(dots.max()) <= -float(dots.min()):
            # difference polygon on the non-positive side of the tangent
            pi_ = int(np.argmax(P[:, 0] * nx + P[:, 1] * ny))
            qi_ = int(np.argmin(Q[:, 0] * nx + Q[:, 1] * ny))
        else:
            pi_ = int(np.argmin(P[:, 0] * nx + P[:, 1] * ny))
            qi_ = int(np.argmax(Q[:, 0] * nx + Q[:, 1] * ny))
        picks.append((pi_, qi_))
    (p1, q1), (p2, q2) = picks
    return p1, p2, q1, q2


# --------------------------------------------------------------------------
# anchor pair candidates


def anchor_candidates(S) -> List[Tuple[int, int]]:
    """At most 11 index pairs, one of which is an anchor pair.

    Expects distinct points.  Start from a diameter 2-approximation (p, q).
    If some point lies outside both open disks of radius d(p,q)/2 centered
    at p and q, three pairs suffice (all three mutual pairs are far apart).
    Otherwise the points split into the two disks and the tangent / diameter
    extremes of the two groups complete the set.
    """
    pts = as_points(S)
    n = len(pts)
    if n < 2:
        raise ValueError("need at least 2 points")
    i_p, i_q = diameter_2approx(pts)
    p = pts[i_p]
    q = pts[i_q]
    d2 = float((q - p) @ (q - p))
    if d2 == 0.0:
        raise ValueError("all points coincide")
    R2 = d2 / 4.0
    d2p = ((pts - p) ** 2).sum(axis=1)
    d2q = ((pts - q) ** 2).sum(axis=1)
    far = (d2p >= R2) & (d2q >= R2)
    if far.any():
        r = int(np.flatnonzero(far)[0])
        raw = [(i_p, i_q), (i_p, r), (i_q, r)]
    else:
        P_idx = np.flatnonzero(d2p < R2)
        Q_idx = np.flatnonzero(d2q < R2)
        t1, t2, t3, t4 = inner_tangent_extremes(pts[P_idx], pts[Q_idx])
        p1, p2 = int(P_idx[t1]), int(P_idx[t2])
        q1, q2 = int(Q_idx[t3]), int(Q_idx[t4])
        if len(P_idx) >= 2:
            a, b = diameter_2approx(pts[P_idx])
            p3, p4 = int(P_idx[a]), int(P_idx[b])
        else:
            p3 = p4 = int(P_idx[0])
        if len(Q_idx) >= 2:
            a, b = diameter_2approx(pts[Q_idx])
            q3, q4 = int(Q_idx[a]), int(Q_idx[b])
        else:
            q3 = q4 = int(Q_idx[0])
        raw = [(i_p, i_q), (p3, p4), (q3, q4)]
        raw += [(i_p, qq) for qq in (q1, q2, q3, q4)]
        raw += [(i_q, pp) for pp in (p1, p2, p3, p4)]
    pairs = []
    seen = set()
    for a, b in raw:
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return pairs


# --------------------------------------------------------------------------
# width binary search per candidate pair


def _select_low(idxs: np.ndarray, ds: np.ndarray, k: int):
    """Mask of the k+1 smallest entries by (distance, index); also returns
    the position of the rank-k entry itself."""
    part = np.argpartition(ds, k)
    dv = ds[part[k]]
    low = ds < dv
    tie = np.flatnonzero(ds == dv)
    need = k + 1 - int(low.sum())
    tie = tie[np.argsort(idxs[tie], kind="stable")]
    low[tie[:need]] = True
    return low, int(tie[need - 1])


class _PairRun:
    """State of the rank binary search for one candidate pair.

    The sketch always holds the points strictly farther from the center
    line than the current upper rank's distance; boundary ties (equal
    distance, larger index) live in a side buffer so the insertion sets
    stay purely distance-based.
    """

    def __init__(self, pts: np.ndarray, ip: int, iq: int):
        self.pts = pts
        self.ip, self.iq = ip, iq
        p, q = pts[ip], pts[iq]
        self.theta = normalize_orientation(
            math.atan2(q[1] - p[1], q[0] - p[0]))
        nrm = normal(self.theta)
        self.c0 = float(p @ nrm)
        self.dist = np.abs(pts @ nrm - self.c0)
        n = len(pts)
        self.o_idx = int(np.lexsort((np.arange(n), self.dist))[-1])
        self.sketch = WidthSketch()
        self.sketch.insert(pts[self.o_idx])
        self.idxs = np.arange(n)
        self.ds = self.dist.copy()
        self.buffer = np.empty(0, dtype=np.intp)  # ties at the e-boundary
        self.d_e = float(self.ds.max())
        self.touched = n
        self.trace: List[Tuple[float, float, bool]] = []

    def _grown(self, base: WidthSketch, d_new: float):
        """Clone of base with every current point of distance > d_new (plus
        boundary-buffer points when they qualify) inserted in index order."""
        sel = self.idxs[self.ds > d_new]
        if self.d_e > d_new and len(self.buffer):
            sel = np.concatenate((sel, self.buffer))
        sel = np.sort(sel[sel != self.o_idx])
        clone = base.clone()
        if len(sel):
            clone.insert_batch(self.pts[sel])
        self.touched += len(sel)
        return clone, clone.query()

    def run(self, debug: bool = False) -> Solution:
        flag_s, flag_e = False, True
        s, e = 0, len(self.pts) - 1
        while e - s + 1 > 3:
            assert flag_s is False and flag_e is True
            m = (s + e) // 2
            low, pivot = _select_low(self.idxs, self.ds, m - s)
            self.touched += len(self.ds)
            d_m = float(self.ds[pivot])
            f_m = 2.0 * d_m
            clone, g_m = self._grown(self.sketch, d_m)
            if debug:
                self.trace.append((f_m, g_m, f_m >= g_m))
            if f_m >= g_m:
                self.sketch = clone
                tie_high = (~low) & (self.ds == d_m)
                new_buf = self.idxs[tie_high]
                if self.d_e == d_m and len(self.buffer):
                    new_buf = np.concatenate((self.buffer, new_buf))
                self.buffer = new_buf
                self.d_e = d_m
                self.idxs, self.ds = self.idxs[low], self.ds[low]
                e = m
                flag_e = True
            else:
                keep = np.flatnonzero(~low)
                keep = np.append(keep, pivot)
                self.idxs, self.ds = self.idxs[keep], self.ds[keep]
                s = m
                flag_s = False
        # base case: at most 3 candidate ranks remain
        order = np.lexsort((self.idxs, self.ds))
        best = None
        for t in order:
            d_r = float(self.ds[t])
            f_r = 2.0 * d_r
            clone, g_r = self._grown(self.sketch, d_r)
            val = max(f_r, g_r)
            if best is None or val < best[0]:
                best = (val, f_r, g_r, d_r, clone)
        val, f_r, g_r, d_r, clone = best
        slab1 = Slab(self.theta, self.c0 - d_r, self.c0 + d_r)
        slab2 = clone.enclosing_slab()
        sol = Solution(slabs=(slab1, slab2), width=val, variant="general",
                       mode="approx10", epsilon=None,
                       meta={"pair": (self.ip, self.iq),
                             "touched": self.touched,
                             "trace": self.trace if debug else None})
        return sol.equalized()


def ten_approx(S, debug: bool = False) -> Solution:
    """Factor-10 approximation of the general two-slab optimum.

    Linear-time flavor: candidate pairs, then a halving search over
    distance ranks per pair with sketch-priced leftovers.  Raises on
    width-0 instances; run the degeneracy check first.
    """
    pts = dedup_points(as_points(S))
    if len(pts) < 2:
        raise ValueError("need at least 2 distinct points")
    if detect_zero_width(pts, "general") is not None:
        raise ValueError("width-0 instance; run the degeneracy check first")
    best = None
    for ip, iq in anchor_candidates(pts):
        sol = _PairRun(pts, ip, iq).run(debug=debug)
        if best is None or sol.width < best.width:
            best = sol
    return best
