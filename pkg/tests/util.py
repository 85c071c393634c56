"""Independent mini-oracles shared by the test modules.

Everything here recomputes values from first principles (dense sweeps, brute
force, exhaustive enumeration) without calling the library code under test,
so that frozen expected values in the tests have a second, independent route.
"""

from __future__ import annotations

import math

import numpy as np


def widths_at(points, thetas) -> np.ndarray:
    """Fixed-orientation widths via direct projection arithmetic."""
    pts = np.asarray(points, dtype=np.float64)
    th = np.asarray(thetas, dtype=np.float64)
    proj = np.outer(-np.sin(th), pts[:, 0]) + np.outer(np.cos(th), pts[:, 1])
    return proj.max(axis=1) - proj.min(axis=1)


def dense_sweep_width(points, samples: int = 10 ** 6) -> float:
    """Min width over a dense orientation grid, chunked to bound memory."""
    best = math.inf
    chunk = max(1, (1 << 22) // max(len(points), 1))
    grid = np.linspace(0.0, math.pi, samples, endpoint=False)
    for s in range(0, samples, chunk):
        best = min(best, float(widths_at(points, grid[s:s + chunk]).min()))
    return best


def brute_force_hull(points) -> set[int]:
    """Hull vertex indices by edge-sidedness, O(n^3); strict general position."""
    pts = np.asarray(points, dtype=np.float64)
    n = len(pts)
    if n == 1:
        return {0}
    vertices: set[int] = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            d = pts - pts[i]
            e = pts[j] - pts[i]
            side = e[0] * d[:, 1] - e[1] * d[:, 0]
            side[i] = side[j] = 0.0
            if (side <= 0.0).all() or (side >= 0.0).all():
                vertices.add(i)
                vertices.add(j)
    return vertices


def all_splits_parallel_width(points, theta: float) -> float:
    """Best max-width over every projection split (and the no-split case)."""
    pts = np.asarray(points, dtype=np.float64)
    offs = np.sort(-math.sin(theta) * pts[:, 0] + math.cos(theta) * pts[:, 1])
    m = len(offs)
    if m == 1:
        return 0.0
    best = offs[-1] - offs[0]
    for k in range(m - 1):
        best = min(best, max(offs[k] - offs[0], offs[-1] - offs[k + 1]))
    return float(best)


def brute_force_diameter(points) -> float:
    pts = np.asarray(points, dtype=np.float64)
    d2 = ((pts[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2)
    return float(np.sqrt(d2.max()))


def tangent_range_region(points, t1: float, t2: float, xs, ys) -> np.ndarray:
    """Boolean grid membership in the intersection of all slabs over [t1, t2].

    Samples the orientation interval densely; a grid point belongs iff its
    projection lies within the point set's extent at every sampled theta.
    """
    pts = np.asarray(points, dtype=np.float64)
    gx, gy = np.meshgrid(np.asarray(xs), np.asarray(ys))
    member = np.ones(gx.shape, dtype=bool)
    for th in np.linspace(t1, t2, 721):
        nx, ny = -math.sin(th), math.cos(th)
        offs = pts[:, 0] * nx + pts[:, 1] * ny
        g = gx * nx + gy * ny
        member &= (g >= offs.min() - 1e-12) & (g <= offs.max() + 1e-12)
    return member


def two_slab_cover_ok(solution, points, tol: float) -> bool:
    """Coverage check done with raw arithmetic, not Slab.contains."""
    pts = np.asarray(points, dtype=np.float64)
    ok = np.zeros(len(pts), dtype=bool)
    for slab in solution.slabs:
        nx, ny = -math.sin(slab.theta), math.cos(slab.theta)
        offs = pts[:, 0] * nx + pts[:, 1] * ny
        ok |= (offs >= slab.lo - tol) & (offs <= slab.hi + tol)
    return bool(ok.all())


def max_slab_width(solution) -> float:
    return max(solution.slabs[0].width, solution.slabs[1].width)


def rand_points(rng: np.random.Generator, n: int, scale: float = 10.0) -> np.ndarray:
    return rng.uniform(-scale, scale, size=(n, 2))


def rand_two_clusters(rng: np.random.Generator, n: int,
                      spread: float = 1.0, gap: float = 20.0) -> np.ndarray:
    half = n // 2
    a = rng.normal((0.0, 0.0), spread, size=(half, 2))
    b = rng.normal((gap, gap * 0.3), spread, size=(n - half, 2))
    return np.vstack([a, b])
