"""Streaming 6-approximation of the width of a point stream.

The sketch keeps the first point o, a small retained set V (stored relative
to o), and a running bound w.  After any prefix P of the stream,

    width(P) <= w <= 6 * width(P),

and a single enclosing slab of width exactly w covering all of P can be read
off the state.  State size is O(1): |V| stays tiny for the fixed delta (a
hard cap asserts the documented bound).
"""

from __future__ import annotations

import math

import numpy as np

from .geom import Slab, as_points, convex_hull, min_width_slab, point_in_hull, width_exact

DELTA = 0.1
V_CAP = 200  # implementation-bug guard, not an input limit


class WidthSketch:
    """Constant-size width sketch; insert points, query the running bound."""

    __slots__ = ("delta", "_sin_delta", "ox", "oy", "_V", "w", "count",
                 "_varr", "_vnorm", "_hull", "_hn", "_hs", "_hi")

    def __init__(self, delta: float = DELTA):
        self.delta = delta
        self._sin_delta = math.sin(delta)
        self.ox = self.oy = 0.0
        self._V: list[tuple[float, float]] = []  # vectors relative to o
        self.w = 0.0
        self.count = 0
        self._varr = None   # cached (len(V), 2) array of relative vectors
        self._vnorm = None  # cached norms
        self._hull = None   # cached hull of V union {o}, relative coords
        self._hn = None     # cached unit edge normals of that hull
        self._hs = None     # cached per-normal max vertex offset
        self._hi = None     # cached per-normal min vertex offset

    # -- state plumbing ------------------------------------------------------

    def clone(self) -> "WidthSketch":
        other = WidthSketch(self.delta)
        other.ox, other.oy = self.ox, self.oy
        other._V = list(self._V)
        other.w = self.w
        other.count = self.count
        other._varr = self._varr
        other._vnorm = self._vnorm
        other._hull = self._hull
        other._hn, other._hs, other._hi = self._hn, self._hs, self._hi
        return other

    def _v_arrays(self):
        if self._varr is None:
            self._varr = np.array(self._V, dtype=np.float64).reshape(len(self._V), 2)
            self._vnorm = np.hypot(self._varr[:, 0], self._varr[:, 1])
        return self._varr, self._vnorm

    def _hull_data(self):
        if self._hull is None:
            R = self._rel_points()
            hv = R[convex_hull(R)]
            h = len(hv)
            if h >= 2:
                e = (np.roll(hv, -1, axis=0) - hv) if h > 2 else hv[1:] - hv[:1]
                ln = np.hypot(e[:, 0], e[:, 1])
                N = np.c_[-e[:, 1], e[:, 0]] / ln[:, None]
                dv = hv @ N.T
                self._hn = N
                self._hs = dv.max(axis=0)
                self._hi = dv.min(axis=0)
            else:
                self._hn = self._hs = self._hi = None
            self._hull = hv
        return self._hull, self._hn, self._hs, self._hi

    def _rel_points(self) -> np.ndarray:
        """V together with the origin, in o-relative coordinates."""
        out = np.zeros((len(self._V) + 1, 2))
        if self._V:
            out[1:] = self._V
        return out

    # -- insertion -----------------------------------------------------------

    def insert(self, point) -> None:
        px, py = float(point[0]), float(point[1])
        if not (math.isfinite(px) and math.isfinite(py)):
            raise ValueError("non-finite coordinate in point set")
        if self.count == 0:
            self.ox, self.oy = px, py
            self.count = 1
            return
        self._insert_rel(px - self.ox, py - self.oy)

    def _insert_rel(self, rx: float, ry: float) -> None:
        self.count += 1
        cand = self._rel_points()
        w_new = 6.0 * width_exact(np.vstack([cand, [(rx, ry)]]))[0]
        if w_new > self.w:
            self.w = w_new
        norm_p = math.hypot(rx, ry)
        if norm_p == 0.0:
            return  # duplicate of o never changes V union {o}
        keep_out_cos = -self._sin_delta  # angle > pi/2 + delta
        for vx, vy in self._V:
            norm_v = math.hypot(vx, vy)
            if norm_p > (1.0 + self.delta) * norm_v:
                continue
            if rx * vx + ry * vy < keep_out_cos * norm_p * norm_v:
                continue
            return  # some v blocks the insertion
        kept = []
        for vx, vy in self._V:
            norm_v = math.hypot(vx, vy)
            if (norm_v <= self.delta * norm_p
                    and rx * vx + ry * vy >= keep_out_cos * norm_p * norm_v):
                continue
            kept.append((vx, vy))
        kept.append((rx, ry))
        assert len(kept) <= V_CAP, "retained set exceeded its documented cap"
        self._V = kept
        self._varr = self._vnorm = None
        self._hull = self._hn = self._hs = self._hi = None

    def insert_batch(self, points) -> None:
        """Insert many points in order, skipping provable no-ops in bulk.

        Equivalent to sequential insert() calls.  A point is skipped only
        when V provably ignores it (the insertion test fails) and w provably
        cannot move: the point lies inside the hull of V union {o}, or a
        certified upper bound on its width contribution sits a safe relative
        margin below w.  Anything else takes the exact sequential path, so
        the resulting state matches point-by-point insertion.
        """
        pts = as_points(points)
        if not np.isfinite(pts).all():
            raise ValueError("non-finite coordinate in point set")
        i = 0
        n = len(pts)
        if n == 0:
            return
        if self.count == 0:
            self.insert(pts[0])
            i = 1
        rel = pts[i:] - (self.ox, self.oy)
        self.count += len(rel)
        i = 0
        n = len(rel)
        # Skippability is checked one bounded chunk at a time: every slow
        # insert may change the state, so the vectorized mask is only valid
        # up to the next inserted point, and rescanning the whole suffix
        # after each insert would be quadratic.
        chunk = 1024
        while i < n:
            j = min(i + chunk, n)
            cold = self._cold_mask(rel[i:j])
            if cold.all():
                i = j
                continue
            i += int(np.argmin(cold))
            self.count -= 1  # _insert_rel recounts this point
            self._insert_rel(float(rel[i, 0]), float(rel[i, 1]))
            i += 1

    def _cold_mask(self, rel: np.ndarray) -> np.ndarray:
        """True where sequential insertion would provably not change state."""
        norms = np.hypot(rel[:, 0], rel[:, 1])
        if not self._V:
            return norms == 0.0  # pure duplicates of o
        varr, vnorm = self._v_arrays()
        dots = rel @ varr.T
        near = norms[:, None] <= (1.0 + self.delta) * vnorm[None, :]
        narrow = dots >= (-self._sin_delta) * norms[:, None] * vnorm[None, :]
        blocked = (near & narrow).any(axis=1) | (norms == 0.0)
        if not blocked.any():
            return blocked
        hv, N, S, I = self._hull_data()
        quiet = point_in_hull(rel, hv, tol=0.0)
        if N is not None:
            # extent of hull(V u {o}) u {p} along any fixed direction bounds
            # the width from above; min over the cached edge normals is a
            # certified upper bound on what the slow path would measure
            d = rel @ N.T
            ext = np.maximum(S, d) - np.minimum(I, d)
            quiet |= 6.0 * ext.min(axis=1) <= self.w * (1.0 - 1e-12)
        return blocked & quiet

    # -- queries ---------------------------------------------------------------

    def query(self) -> float:
        if self.count == 0:
            raise ValueError("empty sketch")
        return self.w

    def enclosing_slab(self) -> Slab:
        """A slab of width <= query() covering every point ever inserted.

        Built as the minimum-width slab of V union {o}, widened about its
        center line to width exactly w (docs/derivations.md records why this
        widening suffices for the fixed delta).
        """
        if self.count == 0:
            raise ValueError("empty sketch")
        slab_rel = min_width_slab(self._rel_points())
        slab_rel = slab_rel.padded_to(self.w)
        # translate back to absolute coordinates: offsets shift by <o, n>;
        # the shift re-rounds lo and hi separately, so clamp the width to at
        # most w afterwards (w >= 6*width(V u {o}) makes any excess pure noise)
        shift = -math.sin(slab_rel.theta) * self.ox + math.cos(slab_rel.theta) * self.oy
        slab = Slab(slab_rel.theta, slab_rel.lo + shift, slab_rel.hi + shift)
        if slab.width > self.w:
            slab = slab.with_width(self.w)
        return slab

    @property
    def retained(self) -> np.ndarray:
        """Absolute coordinates of V union {o} (diagnostics and tests)."""
        return self._rel_points() + (self.ox, self.oy)
