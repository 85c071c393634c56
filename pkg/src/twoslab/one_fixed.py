"""Exact and approximate two-slab cover with one orientation fixed.

Rotate the plane so the fixed slab is horizontal.  As a horizontal slab of
width omega slides down the point set, the points split into the set A
strictly above it, the set B strictly below it, and the covered middle; a
cover of width omega exists iff some split has ``width(A | B) <= omega``.
The decision sweep maintains the hulls of A and B (A only gains points, B
only loses its topmost), the two outer common tangents between them, and,
once the tangent orientations cross so that A dominates B (every slab over
A within the tangent range also covers B), the antipodal supports of A at
the ends of that range.  Every event exposes at most a fresh tangent
subrange; folding the minimal width of A over that subrange into a running
minimum costs amortized constant time, so one decision is linear after
sorting.  Both sweep directions always run, on the points and on their
reflection, because domination may hold on either side.

The optimum is bracketed between consecutive values of the pairwise
y-difference set.  The search mixes interval midpoints with weighted
medians of the differences still inside the bracket, so clustered or
repeated gaps cannot stall it, and finishes with one optimization sweep at
a width strictly inside the final bracket: the folded minimum and the
bracket top together give the exact answer.

``approx`` shrinks the input to a width certificate first and expands the
result, a (1 + eps) guarantee at the same orientation for any input size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geom import (
    Slab,
    Solution,
    as_points,
    dedup_points,
    edge_point_distance,
    normalize_orientation,
    width_exact,
)
from .certificate import reduce_solve_expand
from .hullchain import ChainCycle, GrowingHull, ShrinkingHull, WindowHull, window_hull_update
from .oracles import detect_zero_width

__all__ = [
    "SweepState",
    "WindowHull",
    "approx",
    "decide",
    "exact",
    "window_hull_update",
]

_INF = float("inf")
_BIG = 1 << 60


def _edge_theta(dx: float, dy: float) -> float:
    """Orientation of an edge direction folded into [0, pi)."""
    t = math.atan2(dy, dx)
    if t < 0.0:
        t += math.pi
    if t >= math.pi:
        t -= math.pi
    return t


@dataclass
class SweepState:
    """Snapshot of the decision sweep, handed to event callbacks.

    Hulls are counterclockwise vertex arrays; tangents are ((a, b)) point
    pairs from the upper to the lower hull; the antipodal pairs are the
    supports of the upper hull at theta1 and theta2 once it dominates.
    ``wmin`` is the best split width folded so far.
    """

    hull_above: np.ndarray
    hull_below: np.ndarray
    theta1: float
    theta2: float
    tangent1: tuple
    tangent2: tuple
    pair_theta1: tuple | None
    pair_theta2: tuple | None
    omega: float
    wmin: float
    dominating: bool
    counters: dict = field(default_factory=dict)


class _Sweep:
    """One downward pass at slab width omega over a sorted frame.

    Folds the width of every realizable (A, B) split into ``best`` and
    stops early once ``best`` drops to ``stop`` (decision mode).  Events
    sharing one sliding value form a group; the hulls and tangents update
    per event, but widths are measured only after all deletions and again
    after all insertions of the group, when the configuration is real.
    """

    def __init__(self, xs, ys, xa, ya, jb0, omega, stop, on_event):
        self.xs = xs
        self.ys = ys
        self.xa = xa
        self.ya = ya
        self.n = len(xs)
        self.omega = omega
        self.stop = stop
        self.on_event = on_event

        self.above = GrowingHull(xs, ys)
        self.cyc_a = ChainCycle(self.above.left, self.above.right)

        skip = np.zeros(self.n, dtype=bool)
        if jb0 < self.n - 1:
            same_y = ya[jb0:-1] == ya[jb0 + 1:]
            same_x = xa[jb0:-1] == xa[jb0 + 1:]
            skip[jb0:-1] = same_y & same_x
        self.skip_del = skip.tolist()
        ascending = [i for i in range(self.n - 1, jb0 - 1, -1) if not self.skip_del[i]]
        self.below = ShrinkingHull(xs, ys, ascending)
        self.cyc_b = ChainCycle(self.below.right, self.below.left)

        self.jb = jb0
        self.ia = 0
        if jb0 < self.n:
            dv = ya[jb0:] + omega
            vals = np.concatenate((dv, ya))
            kinds = np.concatenate(
                (np.zeros(self.n - jb0, np.int8), np.ones(self.n, np.int8))
            )
            idxs = np.concatenate((np.arange(jb0, self.n), np.arange(self.n)))
            o = np.lexsort((idxs, kinds, -vals))
            self.ev_v = vals[o].tolist()
            self.ev_k = kinds[o].tolist()
            self.ev_i = idxs[o].tolist()

        # tangent state; initialised at the first insertion.  The upper
        # endpoints also carry their twin handle: the hull bottom sits on
        # both chains, and an insertion may pop one copy while the vertex
        # survives on the other chain.
        self.a1 = self.a2 = self.b1 = self.b2 = (0, 0)
        self.a1_twin = self.a2_twin = None
        self.a1_id = self.a2_id = self.b1_id = self.b2_id = -1
        self.th1 = math.pi
        self.th2 = 0.0
        # antipodal supports of A at the last committed tangent range
        self.dom = False
        self.pair1 = None
        self.pair2 = None
        self.chk1 = 0.0
        self.chk2 = 0.0
        self._lx = self._ly = math.nan

        self.best = _INF
        self.btheta = 0.0
        self.bia = 0
        self.bjb = 0
        self.early = False
        self.counters = {
            "insert_tangent": 0,
            "insert_width": 0,
            "delete_tangent": 0,
            "delete_width": 0,
            "seed": 0,
        }

    # -- folding ---------------------------------------------------------

    def _mid_extent(self, ia: int, jb: int) -> float:
        # span of the rows the fixed slab actually holds; never above omega
        # by event construction, but it can be the larger of the two widths
        # when the optimum sits exactly on a pairwise row difference
        if jb > ia:
            return self.ya[ia] - self.ya[jb - 1]
        return 0.0

    def _fold(self, value: float, theta: float) -> None:
        value = max(value, self._mid_extent(self.ia, self.jb))
        if value < self.best:
            self.best = value
            self.btheta = theta
            self.bia = self.ia
            self.bjb = self.jb
        if self.stop is not None and self.best <= self.stop:
            self.early = True

    def _fold_final(self, value, theta, ia, jb) -> None:
        value = max(value, self._mid_extent(ia, jb))
        if value < self.best:
            self.best = value
            self.btheta = theta
            self.bia = ia
            self.bjb = jb
        if self.stop is not None and self.best <= self.stop:
            self.early = True

    def _fold_end(self) -> None:
        # B drained: from here on A only grows, so this split is minimal.
        if self.ia == 0:
            self._fold_final(0.0, 0.0, 0, self.n)
            return
        pts = np.column_stack((self.xa[: self.ia], self.ya[: self.ia]))
        w, th = width_exact(pts)
        self._fold_final(w, th, self.ia, self.n)
        self._emit()

    # -- main loop -------------------------------------------------------

    def run(self) -> None:
        if self.jb >= self.n:
            # everything already fits under the top point within omega
            self._fold_final(0.0, 0.0, 0, self.n)
            return
        ev_v = self.ev_v
        ev_k = self.ev_k
        ev_i = self.ev_i
        m = len(ev_v)
        t = 0
        while t < m:
            v = ev_v[t]
            e = t
            had_del = False
            while e < m and ev_k[e] == 0 and ev_v[e] == v:
                self._delete(ev_i[e])
                e += 1
                had_del = True
            if had_del:
                if len(self.below) == 0:
                    self._fold_end()
                    return
                self._checkpoint(False)
                if self.early:
                    return
            had_ins = False
            while e < m and ev_v[e] == v:
                self._insert(ev_i[e])
                e += 1
                had_ins = True
            if had_ins:
                self._checkpoint(True)
                if self.early:
                    return
            t = e

    # -- events ----------------------------------------------------------

    def _insert(self, i: int) -> None:
        self.ia += 1
        xs = self.xs
        ys = self.ys
        x = xs[i]
        y = ys[i]
        if x == self._lx and y == self._ly:
            return  # duplicate point, hull unchanged
        self._lx = x
        self._ly = y
        above = self.above
        if not above.left:
            above.insert_below(i)
            self._init_tangents(i)
            return
        a1 = self.a1_id
        b1 = self.b1_id
        a2 = self.a2_id
        b2 = self.b2_id
        c1 = (xs[a1] - xs[b1]) * (y - ys[b1]) - (ys[a1] - ys[b1]) * (x - xs[b1])
        c2 = (xs[a2] - xs[b2]) * (y - ys[b2]) - (ys[a2] - ys[b2]) * (x - xs[b2])
        above.insert_below(i)
        pl = len(above.left) - 1
        pr = len(above.right) - 1
        bot = (0, pl)
        twin = (1, pr)
        if c1 <= 0.0:
            # on or right of the right tangent: the new point takes it over
            self.a1 = bot
            self.a1_twin = twin
            self.a1_id = i
            if c1 < 0.0:
                v = self._tan_cw(self._canon_b(self.b1), x, y, "insert_tangent")
                self.b1 = v
                j = self.cyc_b.vertex(v)
                self.b1_id = j
                self.th1 = math.atan2(y - ys[j], x - xs[j])
        if c2 >= 0.0:
            self.a2 = bot
            self.a2_twin = twin
            self.a2_id = i
            if c2 > 0.0:
                v = self._tan_ccw(self._canon_b(self.b2), x, y, "insert_tangent")
                self.b2 = v
                j = self.cyc_b.vertex(v)
                self.b2_id = j
                self.th2 = math.atan2(y - ys[j], x - xs[j])
        if self.pair1 is not None:
            # keep the antipodal pairs at the committed orientations current:
            # a later event may rotate only the other boundary, so the pair
            # cannot wait for a walk on this side to pick the point up
            self.pair1 = self._pair_bump(self.pair1, self.chk1, bot, i, x, y)
            self.pair2 = self._pair_bump(self.pair2, self.chk2, bot, i, x, y)

    def _pair_bump(
        self, pair: tuple, theta: float, h: tuple, i: int, x: float, y: float
    ) -> tuple:
        xs = self.xs
        ys = self.ys
        nx = -math.sin(theta)
        ny = math.cos(theta)
        k = nx * x + ny * y
        lo, hi = pair
        if k < nx * xs[lo[1]] + ny * ys[lo[1]]:
            return ((h, i), hi)
        if k > nx * xs[hi[1]] + ny * ys[hi[1]]:
            return (lo, (h, i))
        return pair

    def _delete(self, j: int) -> None:
        self.jb += 1
        if self.skip_del[j]:
            return
        below = self.below
        if len(below) == 1 or not self.above.left:
            # rounding can push a removal value at or above the first
            # insertion; with nothing above yet there are no tangents to
            # repair, and empty-above splits are folded by the reflected
            # sweep, so only the hull update matters
            below.delete_topmost()
            return
        cyc = self.cyc_b
        xs = self.xs
        ys = self.ys
        top = cyc.last()
        p = cyc.vertex(top)
        a1 = self.a1_id
        b1 = self.b1_id
        a2 = self.a2_id
        b2 = self.b2_id
        c1 = (xs[a1] - xs[b1]) * (ys[p] - ys[b1]) - (ys[a1] - ys[b1]) * (xs[p] - xs[b1])
        c2 = (xs[a2] - xs[b2]) * (ys[p] - ys[b2]) - (ys[a2] - ys[b2]) * (xs[p] - xs[b2])
        on_right = c1 <= 0.0
        on_left = c2 >= 0.0
        t1 = cyc.ccw(top) if on_right else None
        t2 = cyc.cw(top) if on_left else None
        below.delete_topmost()
        if on_right:
            v = self._canon_b(t1)
            v = self._tan_cw(v, xs[a1], ys[a1], "delete_tangent")
            u = self._a_resolve(self.a1, self.a1_twin, a1, cyc.vertex(v), True)
            u, v = self._tighten(u, v, True)
            self.a1 = u
            self.a1_twin = self._twin_a(u)
            self.a1_id = ui = self.cyc_a.vertex(u)
            self.b1 = v
            self.b1_id = vi = cyc.vertex(v)
            self.th1 = math.atan2(ys[ui] - ys[vi], xs[ui] - xs[vi])
        if on_left:
            v = self._canon_b(t2)
            v = self._tan_ccw(v, xs[a2], ys[a2], "delete_tangent")
            u = self._a_resolve(self.a2, self.a2_twin, a2, cyc.vertex(v), False)
            u, v = self._tighten(u, v, False)
            self.a2 = u
            self.a2_twin = self._twin_a(u)
            self.a2_id = ui = self.cyc_a.vertex(u)
            self.b2 = v
            self.b2_id = vi = cyc.vertex(v)
            self.th2 = math.atan2(ys[ui] - ys[vi], xs[ui] - xs[vi])

    def _canon_b(self, h: tuple) -> tuple:
        # deletion may shrink the left chain under a captured handle
        side, pos = h
        if side == 1:
            cb = self.cyc_b.cb
            if pos <= 0:
                return (0, 0)
            if pos >= len(cb) - 1:
                return (0, len(self.cyc_b.ca) - 1)
        return h

    def _twin_a(self, h: tuple) -> tuple | None:
        # the hull bottom is stored on both chains; remember the other copy
        above = self.above
        if h == (0, len(above.left) - 1):
            return (1, len(above.right) - 1)
        return None

    def _a_resolve(
        self, h: tuple, twin: tuple | None, idx: int, vidx: int, right: bool
    ) -> tuple:
        """Current handle of upper-hull vertex ``idx``, following chain moves."""
        cyc = self.cyc_a
        if cyc.alive(h, idx):
            return h
        if twin is not None:
            cb = cyc.cb
            q = twin[1]
            if 0 <= q < len(cb) and cb[q] == idx:
                if q < len(cb) - 1:
                    return (1, q)
                return (0, len(cyc.ca) - 1)
        return self._scan_tangent_a(vidx, right)

    def _scan_tangent_a(self, vidx: int, right: bool) -> tuple:
        """Tangent point on the upper hull seen from below vertex ``vidx``.

        The apex is strictly below the hull, so the direction vectors all
        share a half-plane and pairwise cross products order them totally;
        the extreme direction is the tangent.  An argmin never goes empty,
        unlike a per-vertex sign test, which roundoff can fail at every
        vertex of an exactly collinear triple.
        """
        cyc = self.cyc_a
        xs = self.xs
        ys = self.ys
        vx = xs[vidx]
        vy = ys[vidx]
        best = None
        bdx = bdy = 0.0
        for h, i in cyc.handles():
            dx = xs[i] - vx
            dy = ys[i] - vy
            if best is None:
                best = h
                bdx = dx
                bdy = dy
                continue
            c = bdx * dy - bdy * dx
            if (c < 0.0) if right else (c > 0.0):
                best = h
                bdx = dx
                bdy = dy
        return best

    def _init_tangents(self, i: int) -> None:
        """Both tangents from the first upper point, by scanning the lower hull."""
        self.a1 = self.a2 = (0, 0)
        self.a1_twin = self.a2_twin = self._twin_a((0, 0))
        self.a1_id = self.a2_id = i
        cyc = self.cyc_b
        xs = self.xs
        ys = self.ys
        ax = xs[i]
        ay = ys[i]
        # the apex sits strictly above the lower hull, so directions to its
        # vertices order totally under the cross product; the extremes are
        # the tangent points (a sign test can reject every vertex of an
        # exactly collinear triple under roundoff)
        b1 = b2 = None
        d1x = d1y = d2x = d2y = 0.0
        for h, v in cyc.handles():
            dx = xs[v] - ax
            dy = ys[v] - ay
            if b1 is None:
                b1 = b2 = h
                d1x = d2x = dx
                d1y = d2y = dy
                continue
            if d1x * dy - d1y * dx > 0.0:
                b1 = h
                d1x = dx
                d1y = dy
            if d2x * dy - d2y * dx < 0.0:
                b2 = h
                d2x = dx
                d2y = dy
        self.b1 = b1
        self.b2 = b2
        j = cyc.vertex(b1)
        self.b1_id = j
        self.th1 = math.atan2(ay - ys[j], ax - xs[j])
        j = cyc.vertex(b2)
        self.b2_id = j
        self.th2 = math.atan2(ay - ys[j], ax - xs[j])

    def _tan_cw(self, v: tuple, ax: float, ay: float, key: str) -> tuple:
        """Clockwise on the lower hull to the right tangent point from (ax, ay)."""
        cyc = self.cyc_b
        xs = self.xs
        ys = self.ys
        counters = self.counters
        guard = len(cyc) + 4
        while guard > 0:
            i = cyc.vertex(v)
            nb = cyc.cw(v)
            k = cyc.vertex(nb)
            if (ax - xs[i]) * (ys[k] - ys[i]) - (ay - ys[i]) * (xs[k] - xs[i]) < 0.0:
                v = nb
                counters[key] += 1
                guard -= 1
            else:
                return v
        raise RuntimeError("tangent walk failed to terminate")

    def _tan_ccw(self, v: tuple, ax: float, ay: float, key: str) -> tuple:
        cyc = self.cyc_b
        xs = self.xs
        ys = self.ys
        counters = self.counters
        guard = len(cyc) + 4
        while guard > 0:
            i = cyc.vertex(v)
            nb = cyc.ccw(v)
            k = cyc.vertex(nb)
            if (ax - xs[i]) * (ys[k] - ys[i]) - (ay - ys[i]) * (xs[k] - xs[i]) > 0.0:
                v = nb
                counters[key] += 1
                guard -= 1
            else:
                return v
        raise RuntimeError("tangent walk failed to terminate")

    def _tighten(self, u: tuple, v: tuple, right: bool) -> tuple:
        """Advance both tangent endpoints until the line supports both hulls.

        Walks clockwise on both hulls for the right tangent and counter-
        clockwise for the left one, alternating until neither side moves.
        """
        cyc_a = self.cyc_a
        cyc_b = self.cyc_b
        xs = self.xs
        ys = self.ys
        counters = self.counters
        la = len(cyc_a)
        lb = len(cyc_b)
        guard = 2 * (la + lb) + 8
        moved = True
        while moved:
            moved = False
            while la > 1:
                ui = cyc_a.vertex(u)
                vi = cyc_b.vertex(v)
                dx = xs[ui] - xs[vi]
                dy = ys[ui] - ys[vi]
                nb = cyc_a.cw(u) if right else cyc_a.ccw(u)
                k = cyc_a.vertex(nb)
                s = dx * (ys[k] - ys[ui]) - dy * (xs[k] - xs[ui])
                if (s < 0.0) if right else (s > 0.0):
                    u = nb
                    moved = True
                    counters["delete_tangent"] += 1
                    guard -= 1
                    if guard < 0:
                        raise RuntimeError("tangent walk failed to terminate")
                else:
                    break
            while lb > 1:
                ui = cyc_a.vertex(u)
                vi = cyc_b.vertex(v)
                dx = xs[ui] - xs[vi]
                dy = ys[ui] - ys[vi]
                nb = cyc_b.cw(v) if right else cyc_b.ccw(v)
                k = cyc_b.vertex(nb)
                s = dx * (ys[k] - ys[vi]) - dy * (xs[k] - xs[vi])
                if (s < 0.0) if right else (s > 0.0):
                    v = nb
                    moved = True
                    counters["delete_tangent"] += 1
                    guard -= 1
                    if guard < 0:
                        raise RuntimeError("tangent walk failed to terminate")
                else:
                    break
        return u, v

    # -- width folding over tangent ranges --------------------------------

    def _scan(self, theta: float, want_max: bool) -> tuple:
        """Support of the upper hull at theta by a full vertex scan."""
        nx = -math.sin(theta)
        ny = math.cos(theta)
        xs = self.xs
        ys = self.ys
        best = None
        bk = 0.0
        for h, i in self.cyc_a.handles():
            k = nx * xs[i] + ny * ys[i]
            if best is None or (k > bk if want_max else k < bk):
                best = h
                bk = k
        return best, bk

    def _start(self, stored: tuple, theta: float, want_max: bool) -> tuple:
        """Support at theta from the committed pair endpoint.

        Insertions refresh the stored pairs eagerly, so a live endpoint is
        still extreme; a strictly extreme vertex never leaves the hull of a
        superset, and tie swallows kill the handle, which the liveness check
        catches.  A dead endpoint forces the full scan.
        """
        if not self.cyc_a.alive(stored[0], stored[1]):
            h, _ = self._scan(theta, want_max)
            return h
        return stored[0]

    def _walk(self, vmin: tuple, vmax: tuple, alpha: float, beta: float, key: str) -> tuple:
        """Rotate the antipodal supports of the upper hull from alpha to beta.

        Folds the extent at both ends and an exact edge-to-point distance at
        every support edge flushing inside the range.  alpha < beta advances
        counterclockwise, alpha > beta clockwise.  Returns the supports at
        beta.

        Both ends are anchored by full support scans: orientations decide
        only the merge order of the two edge streams, never admission.  A
        flush that roundoff lands a few ulps outside the range (an edge can
        be exactly parallel to a tangent) still folds, at the clamped
        orientation, and a two-vertex hull, whose opposite edges alias to
        one folded orientation, cannot make the walk spin.
        """
        cyc = self.cyc_a
        xs = self.xs
        ys = self.ys
        up = beta >= alpha
        emin, _ = self._scan(beta, False)
        emax, _ = self._scan(beta, True)
        iv = cyc.vertex(vmin)
        av = cyc.vertex(vmax)
        dx = xs[av] - xs[iv]
        dy = ys[av] - ys[iv]
        self._fold(abs(dy * math.cos(alpha) - dx * math.sin(alpha)), alpha)
        lo, hi = (alpha, beta) if up else (beta, alpha)
        counters = self.counters
        guard = 2 * len(cyc) + 8
        while vmax != emax or vmin != emin:
            tmax = tmin = None
            if vmax != emax:
                nmax = cyc.ccw(vmax) if up else cyc.cw(vmax)
                jmax = cyc.vertex(nmax)
                tmax = _edge_theta(xs[jmax] - xs[av], ys[jmax] - ys[av])
                tmax = lo if tmax < lo else (hi if tmax > hi else tmax)
            if vmin != emin:
                nmin = cyc.ccw(vmin) if up else cyc.cw(vmin)
                jmin = cyc.vertex(nmin)
                tmin = _edge_theta(xs[jmin] - xs[iv], ys[jmin] - ys[iv])
                tmin = lo if tmin < lo else (hi if tmin > hi else tmin)
            if tmin is None:
                take_max = True
            elif tmax is None:
                take_max = False
            else:
                take_max = (tmax <= tmin) if up else (tmax >= tmin)
            if take_max:
                self._fold(
                    edge_point_distance(xs[av], ys[av], xs[jmax], ys[jmax], xs[iv], ys[iv]),
                    tmax,
                )
                vmax = nmax
                av = jmax
            else:
                self._fold(
                    edge_point_distance(xs[iv], ys[iv], xs[jmin], ys[jmin], xs[av], ys[av]),
                    tmin,
                )
                vmin = nmin
                iv = jmin
            counters[key] += 1
            guard -= 1
            if guard < 0:
                raise RuntimeError("antipodal walk failed to terminate")
        dx = xs[av] - xs[iv]
        dy = ys[av] - ys[iv]
        self._fold(abs(dy * math.cos(beta) - dx * math.sin(beta)), beta)
        return vmin, vmax

    def _checkpoint(self, had_ins: bool) -> None:
        """Commit the group: measure freshly exposed tangent ranges.

        Configurations mid-group are transient, so widths are only folded
        here, where the split (A, B) is realizable at the group value.
        """
        if self.on_event is None and not self.dom and self.th1 > self.th2:
            return
        cyc = self.cyc_a
        if not self.dom:
            if self.th1 <= self.th2:
                self.dom = True
                h1, _ = self._scan(self.th1, False)
                h2, _ = self._scan(self.th1, True)
                start = ((h1, cyc.vertex(h1)), (h2, cyc.vertex(h2)))
                e1, e2 = self._walk(h1, h2, self.th1, self.th2, "seed")
                self.pair1 = start
                self.pair2 = ((e1, cyc.vertex(e1)), (e2, cyc.vertex(e2)))
                self.chk1 = self.th1
                self.chk2 = self.th2
        else:
            key = "insert_width" if had_ins else "delete_width"
            if self.th1 < self.chk1:
                smin = self._start(self.pair1[0], self.chk1, False)
                smax = self._start(self.pair1[1], self.chk1, True)
                e1, e2 = self._walk(smin, smax, self.chk1, self.th1, key)
                self.pair1 = ((e1, cyc.vertex(e1)), (e2, cyc.vertex(e2)))
                self.chk1 = self.th1
            if self.th2 > self.chk2:
                smin = self._start(self.pair2[0], self.chk2, False)
                smax = self._start(self.pair2[1], self.chk2, True)
                e1, e2 = self._walk(smin, smax, self.chk2, self.th2, key)
                self.pair2 = ((e1, cyc.vertex(e1)), (e2, cyc.vertex(e2)))
                self.chk2 = self.th2
        self._emit()

    def _emit(self) -> None:
        if self.on_event is None:
            return
        xs = self.xs
        ys = self.ys

        def pt(i):
            return (xs[i], ys[i])

        above = np.asarray([pt(i) for i in self.above.vertices()], dtype=float).reshape(-1, 2)
        below = np.asarray([pt(i) for i in self.below.vertices()], dtype=float).reshape(-1, 2)
        p1 = p2 = None
        if self.pair1 is not None:
            p1 = (pt(self.pair1[0][1]), pt(self.pair1[1][1]))
            p2 = (pt(self.pair2[0][1]), pt(self.pair2[1][1]))
        t1 = t2 = ((math.nan, math.nan), (math.nan, math.nan))
        if self.a1_id >= 0 and len(self.below) > 0:
            t1 = (pt(self.a1_id), pt(self.b1_id))
            t2 = (pt(self.a2_id), pt(self.b2_id))
        self.on_event(
            SweepState(
                hull_above=above,
                hull_below=below,
                theta1=self.th1,
                theta2=self.th2,
                tangent1=t1,
                tangent2=t2,
                pair_theta1=p1,
                pair_theta2=p2,
                omega=self.omega,
                wmin=self.best,
                dominating=self.dom,
                counters=dict(self.counters),
            )
        )


class _Frames:
    """Shared sorted frames for the downward and reflected sweeps."""

    def __init__(self, pts: np.ndarray, theta: float):
        x = pts[:, 0]
        y = pts[:, 1]
        if theta != 0.0:
            c = math.cos(theta)
            s = math.sin(theta)
            X = x * c + y * s
            Y = y * c - x * s
        else:
            X = x
            Y = y
        self.Y = Y
        od = np.lexsort((-X, -Y))
        ou = np.lexsort((-X, Y))
        self._down = self._pack(od, X[od], Y[od])
        self._up = self._pack(ou, X[ou], -Y[ou])

    @staticmethod
    def _pack(order, xa, ya):
        return (order, xa, ya, xa.tolist(), ya.tolist())

    def order(self, up: bool) -> np.ndarray:
        return (self._up if up else self._down)[0]

    def sweep(self, up: bool, omega: float, stop, on_event=None) -> _Sweep:
        _, xa, ya, xl, yl = self._up if up else self._down
        jb0 = int(np.searchsorted(-ya, omega - ya[0], side="right"))
        sw = _Sweep(xl, yl, xa, ya, jb0, omega, stop, on_event)
        sw.run()
        return sw


def _probe(frames: _Frames, w: float, on_event=None):
    """Decision at width w over both frames, stopping at the first YES."""
    sd = frames.sweep(False, w, w, on_event)
    if sd.best <= w:
        return True, (False, sd)
    su = frames.sweep(True, w, w, on_event)
    if su.best <= w:
        return True, (True, su)
    return False, None


def _assemble(pts, theta, up, order, ia, jb, btheta, width, mode, meta) -> Solution:
    """Two covering slabs in the original frame from one sweep snapshot.

    ``order`` is the frame's sorted permutation; positions [ia, jb) form
    the middle covered by the fixed slab and the rest is covered by the
    slab at the folded orientation, mapped back through the reflection and
    rotation of the frame.
    """
    t2 = math.pi - btheta if up else btheta
    t2 = float(normalize_orientation(t2 + theta))
    mids = order[ia:jb]
    rest = np.concatenate((order[:ia], order[jb:]))
    if mids.size:
        s1 = Slab.of_points(theta, pts[mids])
    else:
        nx = -math.sin(theta)
        ny = math.cos(theta)
        lo = pts[order[ia - 1]]
        hi = pts[order[ia]]
        off = 0.5 * (nx * (lo[0] + hi[0]) + ny * (lo[1] + hi[1]))
        s1 = Slab.line(theta, off)
    if rest.size:
        s2 = Slab.of_points(t2, pts[rest])
    else:
        s2 = Slab.line(theta, s1.center)
    # the reported width comes from the sweep's distance arithmetic; the
    # witness slabs may need a final-ulp extra pad from projection rounding
    w = float(max(s1.width, s2.width) if width is None else width)
    pad = float(max(w, s1.width, s2.width))
    return Solution(
        slabs=(s1.padded_to(pad), s2.padded_to(pad)),
        width=w,
        variant="one-fixed",
        mode=mode,
        epsilon=None,
        meta=meta,
    )


def decide(points, omega, *, on_event=None):
    """Can two width-omega slabs, one of them horizontal, cover the points?

    The points must be sorted by decreasing (y, x).  Returns ``(yes,
    witness)``: on YES the witness Solution pairs the horizontal slab with
    one at the folded orientation, on NO the witness is None.  A negative
    or non-finite omega raises ValueError.  ``on_event`` observes every
    committed sweep state of both directions.
    """
    pts = as_points(points)
    if pts.shape[0] == 0:
        raise ValueError("need at least one point")
    om = float(omega)
    if not math.isfinite(om) or om < 0.0:
        raise ValueError("slab width must be finite and nonnegative")
    if pts.shape[0] > 1:
        dy = np.diff(pts[:, 1])
        dx = np.diff(pts[:, 0])
        if not np.all((dy < 0) | ((dy == 0) & (dx <= 0))):
            raise ValueError("points must be sorted by decreasing (y, x)")
    frames = _Frames(pts, 0.0)
    yes, win = _probe(frames, om, on_event)
    if not yes:
        return False, None
    up, sw = win
    sol = _assemble(
        pts,
        0.0,
        up,
        frames.order(up),
        sw.bia,
        sw.bjb,
        sw.btheta,
        None,
        "witness",
        {"omega": om, "counters": dict(sw.counters)},
    )
    return True, sol


def _count_below(ys: np.ndarray, w: float) -> int:
    idx = np.searchsorted(ys, ys - w, side="right")
    return int((np.arange(ys.size) - idx).sum())


def _row_windows(ys: np.ndarray, lo: float, hi: float):
    """Per-point index ranges of pairwise differences strictly inside (lo, hi)."""
    a = np.searchsorted(ys, ys - hi, side="right")
    b = np.searchsorted(ys, ys - lo, side="left")
    np.minimum(b, np.arange(ys.size), out=b)
    np.minimum(a, b, out=a)
    return a, b


def _median_splitter(ys: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    """Weighted median of the row medians: splits off at least a quarter."""
    sz = b - a
    rows = np.flatnonzero(sz > 0)
    mids = ys[rows] - ys[(a[rows] + b[rows] - 1) // 2]
    weights = sz[rows].astype(float)
    o = np.argsort(mids, kind="stable")
    cw = np.cumsum(weights[o])
    k = int(np.searchsorted(cw, 0.5 * cw[-1]))
    return float(mids[o[min(k, o.size - 1)]])


def _materialize(ys: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = [ys[j] - ys[a[j]:b[j]] for j in np.flatnonzero(b - a > 0)]
    return np.unique(np.concatenate(out))


def exact(points, theta, *, on_event=None) -> Solution:
    """Minimal equal width of two covering slabs, one fixed at ``theta``.

    Zero-width instances return through the degeneracy detector; otherwise
    the optimum is isolated between consecutive pairwise span differences
    by the decision sweep and finished with one optimization sweep per
    direction.  Widths of the returned slabs are equalized.  ``on_event``
    observes the final optimization sweeps.
    """
    pts0 = as_points(points)
    if pts0.shape[0] == 0:
        raise ValueError("need at least one point")
    th = float(theta)
    if not math.isfinite(th):
        raise ValueError("orientation must be finite")
    th = float(normalize_orientation(th))
    degenerate = detect_zero_width(pts0, "one-fixed", theta=th)
    if degenerate is not None:
        return degenerate.equalized()
    pts = dedup_points(pts0)
    frames = _Frames(pts, th)
    ys = np.sort(frames.Y)
    lo = 0.0
    hi = float(ys[-1] - ys[0])
    last = None
    it = 0
    while True:
        a, b = _row_windows(ys, lo, hi)
        inside = int((b - a).sum())
        if inside == 0:
            break
        if inside <= 64:
            vals = _materialize(ys, a, b)
            ilo, ihi = -1, vals.size
            while ihi - ilo > 1:
                k = (ilo + ihi) // 2
                w = float(vals[k])
                yes, win = _probe(frames, w)
                if yes:
                    hi = w
                    last = (w, win)
                    ihi = k
                else:
                    lo = w
                    ilo = k
            break
        w = 0.5 * (lo + hi) if it % 2 == 0 else _median_splitter(ys, a, b)
        if not lo < w < hi:
            w = 0.5 * (lo + hi)
            if not lo < w < hi:
                break
        yes, win = _probe(frames, w)
        if yes:
            hi = w
            last = (w, win)
        else:
            lo = w
        it += 1

    meta = {"theta": th, "bracket": (lo, hi), "counters": None}
    wmid = 0.5 * (lo + hi)
    if lo < wmid < hi:
        sd = frames.sweep(False, wmid, None, on_event)
        su = frames.sweep(True, wmid, None, on_event)
        meta["counters"] = {"down": dict(sd.counters), "up": dict(su.counters)}
        w_star = min(hi, sd.best, su.best)
        if sd.best <= w_star:
            return _assemble(
                pts, th, False, frames.order(False), sd.bia, sd.bjb, sd.btheta,
                w_star, "exact", meta,
            )
        if su.best <= w_star:
            return _assemble(
                pts, th, True, frames.order(True), su.bia, su.bjb, su.btheta,
                w_star, "exact", meta,
            )
    else:
        w_star = hi
    # the optimum sits on the bracket top: reuse (or fetch) its witness
    if last is None or last[0] != hi:
        yes, win = _probe(frames, hi)
        if not yes:  # fp slack: fall back to the nearest certified width
            hi_up = float(np.nextafter(hi, _INF))
            yes, win = _probe(frames, hi_up)
            w_star = hi_up
        last = (w_star, win)
    up, sw = last[1]
    return _assemble(
        pts, th, up, frames.order(up), sw.bia, sw.bjb, sw.btheta, w_star, "exact", meta
    )


def approx(points, theta, eps) -> Solution:
    """(1 + eps)-approximate two-slab cover with one orientation fixed.

    Solves exactly on the width certificate of the input and expands the
    result, so the fixed slab keeps orientation ``theta`` and both widths
    stay within (1 + eps) of the optimum.
    """
    pts = as_points(points)
    if pts.shape[0] == 0:
        raise ValueError("need at least one point")
    eps_f = float(eps)
    if not eps_f > 0.0:
        raise ValueError("epsilon must be positive")
    th = float(theta)
    if not math.isfinite(th):
        raise ValueError("orientation must be finite")
    th = float(normalize_orientation(th))
    degenerate = detect_zero_width(pts, "one-fixed", theta=th)
    if degenerate is not None:
        out = degenerate.equalized()
        out.epsilon = eps_f
        return out
    sol = reduce_solve_expand(pts, eps_f, lambda q: exact(q, th))
    sol.mode = "approx"
    return sol
