"""Input reduction for approximate solvers.

An eps-certificate of a point set S is a subset Q such that whenever a pair
of equal-width slabs covers Q, widening each slab by a factor (1 + eps) about
its center line yields a cover of all of S.  Solving any two-slab variant
exactly on Q and expanding therefore gives a (1 + eps)-approximation on S,
with the expensive step running on O(1/eps^2) points instead of n.

Construction: seed with the constant-factor pair from `ten_approx`, lay a
family of evenly spaced parallel lines inside each seed slab, snap every
point to its nearest line, and keep a small set of extreme points per line
(the 1D certificate).  The kept points are returned by original index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from .anchor import ten_approx
from .geom import Slab, Solution, as_points, direction, project

# Spacing between construction lines is CERT_C * eps times the seed width.
# The covering argument loses a factor (1 + 161*d + 80*d^2) at spacing
# fraction d, so CERT_C must satisfy 161*c + 80*c^2 <= 1; 1/256 gives
# 161/256 + 80/256^2 ~= 0.63 with room to spare.
CERT_C = 1.0 / 256.0


def _effective_eps(eps: float) -> float:
    """Clamp the construction epsilon to 1 (valid for any larger target)."""
    if eps <= 0.0:
        raise ValueError("epsilon must be positive")
    return min(float(eps), 1.0)


def certificate_size_bound(eps: float) -> float:
    """Upper bound on the certificate size for the constants used here.

    Two families of at most 1/(c*e) + 1 lines each, at most 2*ceil(4/e)
    points kept per line:  (512/e + 2) * (8/e + 2) expanded.
    """
    e = _effective_eps(eps)
    return 4096.0 / (e * e) + 1040.0 / e + 4.0


# --------------------------------------------------------------------------
# expansions


def expand_interval(a: float, b: float, eps: float) -> Tuple[float, float]:
    """Widen [a, b] by eps/2 times its length on each side."""
    if a > b:
        raise ValueError("empty interval")
    if eps < 0.0:
        raise ValueError("epsilon must be nonnegative")
    pad = 0.5 * eps * (b - a)
    return a - pad, b + pad


def expand_slab(s: Slab, eps: float) -> Slab:
    """Widen a slab by a factor (1 + eps) about its center line."""
    if eps < 0.0:
        raise ValueError("epsilon must be nonnegative")
    return s.expanded(eps)


# --------------------------------------------------------------------------
# 1D certificates


def certificate_1d(values, eps: float) -> np.ndarray:
    """Indices of an eps-certificate of a multiset of reals.

    Whenever two intervals cover the kept values, their eps-expansions
    cover every input value.  At most 1/eps points are kept verbatim;
    otherwise the span is cut into ceil(4/eps) cells and the leftmost and
    rightmost point of each nonempty cell are kept (ties by input order).
    """
    e = _effective_eps(eps)
    vals = np.asarray(values, dtype=float).ravel()
    m = len(vals)
    if m == 0:
        return np.empty(0, dtype=np.intp)
    if m <= 1.0 / e:
        return np.arange(m, dtype=np.intp)
    lo = float(vals.min())
    span = float(vals.max()) - lo
    if span <= 0.0:
        return np.array([0], dtype=np.intp)
    ncells = math.ceil(4.0 / e)
    cell = np.floor((vals - lo) * (ncells / span)).astype(np.intp)
    np.clip(cell, 0, ncells - 1, out=cell)
    order = np.lexsort((np.arange(m), vals))
    _, first, counts = np.unique(cell[order], return_index=True,
                                 return_counts=True)
    keep = np.unique(np.concatenate((order[first],
                                     order[first + counts - 1])))
    assert len(keep) <= 2 * ncells
    return keep


# --------------------------------------------------------------------------
# 2D certificates


@dataclass(frozen=True)
class LineFamily:
    """Evenly spaced parallel construction lines, stored as offsets."""

    theta: float
    offsets: Tuple[float, ...]


@dataclass(frozen=True, eq=False)
class Certificate:
    """An eps-certificate: indices into the input plus construction data.

    `epsilon` is the construction value (the requested one clamped to 1),
    `seed_width` the width of the constant-factor seed pair, and `lines`
    the two construction families.  The trivial certificate (every index,
    taken when n <= 1/eps^2) has no seed and no lines.
    """

    indices: np.ndarray
    epsilon: float
    seed_width: float = 0.0
    lines: Tuple[LineFamily, ...] = ()

    def __len__(self) -> int:
        return len(self.indices)


def certificate_2d(points, eps: float) -> Certificate:
    """Compute an eps-certificate of a planar point set.

    Requires a nondegenerate instance (positive two-slab optimum) whenever
    n exceeds 1/eps^2; degenerate inputs should be routed to the
    zero-width detector first.
    """
    e = _effective_eps(eps)
    pts = as_points(points)
    n = len(pts)
    if n <= 1.0 / (e * e):
        return Certificate(np.arange(n, dtype=np.intp), e)

    seed = ten_approx(pts)
    wt = seed.width
    delta = CERT_C * e
    spacing = delta * wt
    count = math.floor(1.0 / delta) + 1

    # Snap each point to the nearest line over both families (ties to the
    # first).  A point covered by seed slab j sits within `spacing` of some
    # line of family j, so every snap moves a point at most `spacing`.
    dist = np.empty((2, n))
    line_of = np.empty((2, n), dtype=np.intp)
    along = np.empty((2, n))
    families = []
    for j, slab in enumerate(seed.slabs):
        offs = project(pts, slab.theta)
        li = np.floor((offs - slab.lo) / spacing + 0.5).astype(np.intp)
        np.clip(li, 0, count - 1, out=li)
        dist[j] = np.abs(offs - (slab.lo + li * spacing))
        line_of[j] = li
        along[j] = pts @ direction(slab.theta)
        families.append(LineFamily(slab.theta,
                                   tuple(slab.lo + spacing * np.arange(count))))

    rows = np.where(dist[0] <= dist[1], 0, 1)
    cols = np.arange(n)
    key = rows * count + line_of[rows, cols]
    tpos = along[rows, cols]

    order = np.argsort(key, kind="stable")
    ks = key[order]
    starts = np.flatnonzero(np.r_[True, ks[1:] != ks[:-1]])
    stops = np.r_[starts[1:], n]
    kept = [order[s0:s1][certificate_1d(tpos[order[s0:s1]], e)]
            for s0, s1 in zip(starts, stops)]
    idx = np.unique(np.concatenate(kept))
    assert len(idx) <= min(n, certificate_size_bound(e))
    return Certificate(idx, e, wt, tuple(families))


# --------------------------------------------------------------------------
# reduce / solve / expand


def reduce_solve_expand(points, eps: float,
                        solver: Callable[[np.ndarray], Solution]) -> Solution:
    """(1 + eps)-approximate a two-slab variant via its exact solver.

    Builds an eps-certificate, solves the variant exactly on it, equalizes
    the two widths, and expands both slabs by the construction epsilon.
    The result covers the full input with width at most (1 + eps) times
    the variant optimum.
    """
    pts = as_points(points)
    cert = certificate_2d(pts, eps)
    sol = solver(pts[cert.indices])
    out = sol.equalized().expanded(cert.epsilon)
    meta = dict(out.meta)
    meta["certificate_size"] = len(cert)
    out.epsilon = float(eps)
    out.meta = meta
    return out
