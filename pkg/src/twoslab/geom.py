"""Exact planar primitives shared by every solver and oracle.

Conventions used throughout the package:

* A point set is a float64 array of shape (n, 2).
* An orientation is an angle theta in [0, pi).  A line of orientation theta
  runs along (cos theta, sin theta); its unit normal is
  n(theta) = (-sin theta, cos theta).
* A slab of orientation theta is {p : lo <= <p, n(theta)> <= hi}.  For
  theta = 0 the bounding lines are horizontal.
* All containment tests use a single scale-aware tolerance
  tau = TAU_REL * (bounding-box diagonal of the instance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

TAU_REL = 1e-9


# --------------------------------------------------------------------------
# ingestion


def as_points(points) -> np.ndarray:
    """Coerce to an (n, 2) float64 array, rejecting non-finite coordinates."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        if pts.size == 0:
            return pts.reshape(0, 2)
        if pts.size == 2:
            pts = pts.reshape(1, 2)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("point set must have shape (n, 2)")
    if pts.size and not np.isfinite(pts).all():
        raise ValueError("non-finite coordinate in point set")
    return pts


def dedup_points(points) -> np.ndarray:
    """Drop exact duplicate coordinates, keeping first occurrences in order."""
    pts = as_points(points)
    if len(pts) < 2:
        return pts
    _, first = np.unique(pts, axis=0, return_index=True)
    return pts[np.sort(first)]


def scale_tol(points) -> float:
    """Global tolerance: TAU_REL times the bounding-box diagonal."""
    pts = as_points(points)
    if len(pts) == 0:
        return 0.0
    span = pts.max(axis=0) - pts.min(axis=0)
    return TAU_REL * math.hypot(span[0], span[1])


# --------------------------------------------------------------------------
# orientations and projections


def normalize_orientation(theta: float) -> float:
    """Map theta + k*pi into the canonical range [0, pi)."""
    t = math.fmod(theta, math.pi)
    if t < 0.0:
        t += math.pi
    if t >= math.pi:  # fmod rounding can land exactly on pi
        t -= math.pi
    return t


def normal(theta: float) -> np.ndarray:
    """Unit normal n(theta) = (-sin theta, cos theta)."""
    return np.array([-math.sin(theta), math.cos(theta)])


def direction(theta: float) -> np.ndarray:
    """Unit direction (cos theta, sin theta) along lines of orientation theta."""
    return np.array([math.cos(theta), math.sin(theta)])


def project(points, theta: float) -> np.ndarray:
    """Signed offsets <p, n(theta)> of each point; scalar input gives a scalar."""
    pts = np.asarray(points, dtype=np.float64)
    nx, ny = -math.sin(theta), math.cos(theta)
    if pts.ndim == 1:
        return pts[0] * nx + pts[1] * ny
    return pts[:, 0] * nx + pts[:, 1] * ny


def edge_point_distance(ax: float, ay: float, bx: float, by: float,
                        px: float, py: float) -> float:
    """Distance from p to the line through a and b (a != b).

    Every width in the package funnels through this one expression so that
    widths computed by different code paths compare bit-for-bit equal.
    """
    ux, uy = bx - ax, by - ay
    return abs(ux * (py - ay) - uy * (px - ax)) / math.hypot(ux, uy)


# --------------------------------------------------------------------------
# slabs and solutions


@dataclass(frozen=True)
class Slab:
    """Orientation plus a closed offset interval along the unit normal."""

    theta: float
    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo <= self.hi):
            raise ValueError("slab requires lo <= hi")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def center(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @classmethod
    def of_points(cls, theta: float, points) -> "Slab":
        """Minimal slab of the given orientation enclosing the points."""
        pts = as_points(points)
        if len(pts) == 0:
            raise ValueError("empty point set")
        t = normalize_orientation(theta)
        offs = project(pts, t)
        return cls(t, float(offs.min()), float(offs.max()))

    @classmethod
    def line(cls, theta: float, offset: float) -> "Slab":
        """Degenerate slab: a single line."""
        return cls(normalize_orientation(theta), offset, offset)

    def contains(self, points, tol: float = 0.0) -> np.ndarray:
        offs = project(as_points(points), self.theta)
        return (offs >= self.lo - tol) & (offs <= self.hi + tol)

    def excess(self, points) -> float:
        """Largest offset violation over the points (0 if all inside)."""
        pts = as_points(points)
        if len(pts) == 0:
            return 0.0
        offs = project(pts, self.theta)
        over = float(np.max(offs - self.hi, initial=0.0))
        under = float(np.max(self.lo - offs, initial=0.0))
        return max(over, under, 0.0)

    def expanded(self, eps: float) -> "Slab":
        """Widen by a factor (1 + eps) about the center line."""
        pad = 0.5 * eps * self.width
        return Slab(self.theta, self.lo - pad, self.hi + pad)

    def with_width(self, w: float) -> "Slab":
        """Recenter to width w, guaranteeing hi - lo <= w despite rounding."""
        c = self.center
        lo = c - 0.5 * w
        hi = max(lo, c + 0.5 * w)
        while hi - lo > w:  # trim rounding overshoot, at most a few ulps
            hi = math.nextafter(hi, lo)
        return Slab(self.theta, lo, hi)

    def padded_to(self, w: float) -> "Slab":
        """Widen symmetrically to width w (no-op if already at least as wide)."""
        if w <= self.width:
            return self
        return self.with_width(w)


@dataclass
class Solution:
    """A pair of slabs covering the instance, with solver metadata."""

    slabs: tuple[Slab, Slab]
    width: float
    variant: str
    mode: str
    epsilon: float | None = None
    meta: dict = field(default_factory=dict)

    def covers(self, points, tol: float) -> bool:
        pts = as_points(points)
        if len(pts) == 0:
            return True
        inside = self.slabs[0].contains(pts, tol) | self.slabs[1].contains(pts, tol)
        return bool(inside.all())

    def uncovered(self, points, tol: float) -> np.ndarray:
        pts = as_points(points)
        inside = self.slabs[0].contains(pts, tol) | self.slabs[1].contains(pts, tol)
        return np.flatnonzero(~inside)

    def equalized(self) -> "Solution":
        """Pad the narrower slab so both report the same width."""
        w = max(self.width, self.slabs[0].width, self.slabs[1].width)
        return replace(self, width=w,
                       slabs=(self.slabs[0].padded_to(w), self.slabs[1].padded_to(w)))

    def expanded(self, eps: float) -> "Solution":
        s0, s1 = self.slabs
        return replace(self, slabs=(s0.expanded(eps), s1.expanded(eps)),
                       width=self.width * (1.0 + eps))


# --------------------------------------------------------------------------
# convex hull


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def convex_hull(points) -> np.ndarray:
    """Indices of hull vertices in counterclockwise order.

    Collinear interior points are excluded; ties are broken lexicographically
    by (x, y).  Duplicate coordinates keep their smallest index.  Degenerate
    hulls come back with 1 or 2 vertices.
    """
    pts = as_points(points)
    n = len(pts)
    if n == 0:
        return np.empty(0, dtype=np.intp)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    x, y = pts[:, 0], pts[:, 1]

    seq: list[int] = []
    last_key = None
    for i in order:
        key = (x[i], y[i])
        if key != last_key:
            seq.append(int(i))
            last_key = key
    if len(seq) == 1:
        return np.array(seq, dtype=np.intp)

    def build(src):
        chain: list[int] = []
        for i in src:
            while len(chain) > 1 and _cross(x[chain[-2]], y[chain[-2]],
                                            x[chain[-1]], y[chain[-1]],
                                            x[i], y[i]) <= 0.0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(seq)
    upper = build(seq[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 0:  # all collinear: keep the two extreme vertices
        hull = [seq[0], seq[-1]]
    return np.array(hull, dtype=np.intp)


def point_in_hull(points, hull_pts, tol: float = 0.0) -> np.ndarray:
    """Vectorized membership of points in a CCW hull polygon (closed)."""
    pts = as_points(points)
    hull = as_points(hull_pts)
    h = len(hull)
    if h == 0:
        return np.zeros(len(pts), dtype=bool)
    if h == 1:
        return (np.abs(pts - hull[0]).max(axis=1) <= tol)
    inside = np.ones(len(pts), dtype=bool)
    for k in range(h if h > 2 else 1):
        a = hull[k]
        b = hull[(k + 1) % h]
        side = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (b[1] - a[1]) * (pts[:, 0] - a[0])
        inside &= side >= -tol * math.hypot(b[0] - a[0], b[1] - a[1])
        if h == 2:
            # segment: also clamp along the edge and to the line both ways
            inside &= side <= tol * math.hypot(b[0] - a[0], b[1] - a[1])
            t = (pts[:, 0] - a[0]) * (b[0] - a[0]) + (pts[:, 1] - a[1]) * (b[1] - a[1])
            inside &= (t >= -tol) & (t <= (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2 + tol)
    return inside


# --------------------------------------------------------------------------
# widths


def width_at_orientation(points, theta: float):
    """Minimal slab of fixed orientation.

    Returns (width, slab, (i_lo, i_hi)) where the indices attain the two
    bounds (first occurrence, i.e. smallest index).
    """
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    t = normalize_orientation(theta)
    offs = project(pts, t)
    i_lo = int(np.argmin(offs))
    i_hi = int(np.argmax(offs))
    slab = Slab(t, float(offs[i_lo]), float(offs[i_hi]))
    return slab.width, slab, (i_lo, i_hi)


def _hull_calipers(x, y):
    """Rotating calipers over a CCW hull (>= 3 vertices, no collinear runs).

    Yields (edge index i, antipodal vertex index j, distance) per hull edge,
    with distances computed by edge_point_distance.
    """
    h = len(x)
    j = 1
    # start j at the vertex farthest from edge 0
    best = -1.0
    for k in range(h):
        d = abs((x[1] - x[0]) * (y[k] - y[0]) - (y[1] - y[0]) * (x[k] - x[0]))
        if d > best:
            best = d
            j = k
    for i in range(h):
        i2 = (i + 1) % h
        ux, uy = x[i2] - x[i], y[i2] - y[i]
        while True:
            jn = (j + 1) % h
            d_now = abs(ux * (y[j] - y[i]) - uy * (x[j] - x[i]))
            d_next = abs(ux * (y[jn] - y[i]) - uy * (x[jn] - x[i]))
            if d_next > d_now:
                j = jn
            else:
                break
        yield i, j, edge_point_distance(x[i], y[i], x[i2], y[i2], x[j], y[j])


def width_exact(points):
    """Exact width: min over theta of the fixed-orientation width.

    Returns (width, theta); the minimizing theta is the orientation of some
    hull edge.  Singletons and collinear sets have width 0.
    """
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    hull = convex_hull(pts)
    if len(hull) <= 2:
        if len(hull) == 1:
            return 0.0, 0.0
        a, b = pts[hull[0]], pts[hull[1]]
        return 0.0, normalize_orientation(math.atan2(b[1] - a[1], b[0] - a[0]))
    x = pts[hull, 0].tolist()
    y = pts[hull, 1].tolist()
    best_w = math.inf
    best_theta = 0.0
    for i, _j, d in _hull_calipers(x, y):
        if d < best_w:
            i2 = (i + 1) % len(x)
            best_w = d
            best_theta = normalize_orientation(
                math.atan2(y[i2] - y[i], x[i2] - x[i]))
    return best_w, best_theta


def min_width_slab(points) -> Slab:
    """Minimal enclosing slab (witness form of width_exact)."""
    pts = as_points(points)
    w, theta = width_exact(pts)
    return Slab.of_points(theta, pts).padded_to(w)


def constrained_width(points, lo: float, hi: float):
    """Min over theta in [lo, hi] of the fixed-orientation width.

    The interval lives on the circle of orientations: a wrapped interval
    (normalized lo > hi) splits at pi.  Returns (width, theta).  The minimum
    is attained at an endpoint or at a caliper breakpoint inside the range.
    """
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    if hi - lo >= math.pi:
        return width_exact(pts)
    t_lo = normalize_orientation(lo)
    t_hi = normalize_orientation(hi)

    def in_range(t: float) -> bool:
        if t_lo <= t_hi:
            return t_lo <= t <= t_hi
        return t >= t_lo or t <= t_hi  # wrapped through pi

    # Between caliper breakpoints the width is a |sinusoid| piece with no
    # interior minimum, so endpoints plus in-range hull-edge orientations
    # exhaust the candidates.
    candidates = [t_lo, t_hi]
    hull = convex_hull(pts)
    if len(hull) == 1:
        return 0.0, t_lo
    x = pts[hull, 0].tolist()
    y = pts[hull, 1].tolist()
    h = len(x)
    for i in range(h if h > 2 else 1):
        i2 = (i + 1) % h
        te = normalize_orientation(math.atan2(y[i2] - y[i], x[i2] - x[i]))
        if in_range(te):
            candidates.append(te)
    best_w = math.inf
    best_t = t_lo
    for t in candidates:
        w, _, _ = width_at_orientation(pts, t)
        if w < best_w:
            best_w, best_t = w, t
    return best_w, best_t


# --------------------------------------------------------------------------
# dominance


def _upper_chain(pts: np.ndarray) -> np.ndarray:
    """Upper hull chain, left to right, as coordinates."""
    hull = convex_hull(pts)
    hp = pts[hull]
    if len(hp) <= 2:
        order = np.lexsort((hp[:, 1], hp[:, 0]))
        return hp[order]
    k = len(hp)
    i_left = min(range(k), key=lambda i: (hp[i, 0], hp[i, 1]))
    i_right = max(range(k), key=lambda i: (hp[i, 0], hp[i, 1]))
    out = []
    i = i_right
    while True:  # CCW order walks the upper chain right-to-left
        out.append(hp[i])
        if i == i_left:
            break
        i = (i + 1) % k
    return np.asarray(out[::-1])


def _lower_chain(pts: np.ndarray) -> np.ndarray:
    hull = convex_hull(pts)
    hp = pts[hull]
    if len(hp) <= 2:
        order = np.lexsort((hp[:, 1], hp[:, 0]))
        return hp[order]
    k = len(hp)
    i_left = min(range(k), key=lambda i: (hp[i, 0], hp[i, 1]))
    i_right = max(range(k), key=lambda i: (hp[i, 0], hp[i, 1]))
    out = []
    i = i_left
    while True:
        out.append(hp[i])
        if i == i_right:
            break
        i = (i + 1) % k
    return np.asarray(out)


def outer_tangent_orientations(upper, lower):
    """Orientations (theta_right, theta_left) of the two outer common tangents.

    `upper` must lie strictly above `lower`.  On the counterclockwise merged
    hull the two bridge edges between the sets are exactly the outer common
    tangents: the lower-to-upper bridge is the right tangent, the
    upper-to-lower bridge the left tangent.
    """
    U = as_points(upper)
    L = as_points(lower)
    if len(U) == 0 or len(L) == 0:
        raise ValueError("empty point set")
    if U[:, 1].min() <= L[:, 1].max():
        raise ValueError("hulls intersect")
    merged = np.vstack([U, L])
    hull = convex_hull(merged)
    k = len(hull)
    from_upper = hull < len(U)
    theta_right = theta_left = None
    for i in range(k):
        j = (i + 1) % k
        if from_upper[i] == from_upper[j]:
            continue
        a = merged[hull[i]]
        b = merged[hull[j]]
        t = normalize_orientation(math.atan2(b[1] - a[1], b[0] - a[0]))
        if from_upper[j]:
            theta_right = t
        else:
            theta_left = t
    if theta_right is None or theta_left is None:
        raise ValueError("hulls intersect")
    return theta_right, theta_left


def dominates(P, Q) -> bool:
    """True iff the tangent-range slab of Q is contained in that of P.

    P and Q must be separable by a horizontal line (roles are detected, not
    assumed).  The upper set dominates iff theta_right <= theta_left; on the
    degenerate tie theta_right == theta_left the upper set wins, preserving
    the exactly-one-dominates property.
    """
    P = as_points(P)
    Q = as_points(Q)
    if len(P) == 0 or len(Q) == 0:
        raise ValueError("empty point set")
    if P[:, 1].min() > Q[:, 1].max():
        upper, lower, p_is_upper = P, Q, True
    elif Q[:, 1].min() > P[:, 1].max():
        upper, lower, p_is_upper = Q, P, False
    else:
        raise ValueError("hulls intersect")
    theta_right, theta_left = outer_tangent_orientations(upper, lower)
    upper_dominates = theta_right <= theta_left
    return upper_dominates if p_is_upper else not upper_dominates


# --------------------------------------------------------------------------
# diameter and parallel pairs


def diameter_2approx(points, start: int = 0):
    """Pick q farthest from points[start]; d(start, q) >= diameter / 2.

    Ties go to the smallest index.  Returns (start, q).
    """
    pts = as_points(points)
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    d2 = ((pts - pts[start]) ** 2).sum(axis=1)
    q = int(np.argmax(d2))
    return start, q


def min_parallel_pair_at_orientation(points, theta: float):
    """Best pair of parallel slabs of fixed orientation covering the points.

    The optimal split of the sorted projections is at the gap straddling the
    midline of the full extent; returns (Slab, Slab) minimizing max width.
    """
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    t = normalize_orientation(theta)
    offs = np.sort(project(pts, t))
    lo, hi = float(offs[0]), float(offs[-1])
    if lo == hi:
        return Slab(t, lo, lo), Slab(t, hi, hi)
    mid = 0.5 * (lo + hi)
    k = int(np.searchsorted(offs, mid, side="right")) - 1
    k = min(max(k, 0), len(offs) - 2)
    return Slab(t, lo, float(offs[k])), Slab(t, float(offs[k + 1]), hi)
