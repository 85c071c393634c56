import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twoslab.geom import (
    Slab,
    Solution,
    as_points,
    constrained_width,
    convex_hull,
    dedup_points,
    diameter_2approx,
    dominates,
    edge_point_distance,
    min_parallel_pair_at_orientation,
    min_width_slab,
    normalize_orientation,
    outer_tangent_orientations,
    point_in_hull,
    project,
    scale_tol,
    width_at_orientation,
    width_exact,
)
from util import (
    all_splits_parallel_width,
    brute_force_diameter,
    brute_force_hull,
    dense_sweep_width,
    rand_points,
    tangent_range_region,
    widths_at,
)

SQUARE = np.array([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
TRIANGLE = np.array([(0.0, 0.0), (4.0, 0.0), (2.0, 1.0)])


# -- ingestion ---------------------------------------------------------------

def test_as_points_rejects_nan():
    with pytest.raises(ValueError):
        as_points([(0.0, float("nan"))])
    with pytest.raises(ValueError):
        as_points([(math.inf, 0.0)])


def test_as_points_shape():
    assert as_points([]).shape == (0, 2)
    assert as_points([(1, 2)]).shape == (1, 2)
    with pytest.raises(ValueError):
        as_points([1.0, 2.0, 3.0])


def test_dedup_keeps_first_occurrence_order():
    pts = dedup_points([(1, 1), (0, 0), (1, 1), (2, 2), (0, 0)])
    assert pts.tolist() == [[1, 1], [0, 0], [2, 2]]


def test_scale_tol_is_relative_to_diagonal():
    assert scale_tol([(0, 0), (3, 4)]) == pytest.approx(5e-9)
    assert scale_tol([(7, 7)]) == 0.0


# -- orientations and projections --------------------------------------------

def test_normalize_orientation_range():
    assert normalize_orientation(math.pi) == 0.0
    assert normalize_orientation(-0.25) == pytest.approx(math.pi - 0.25)
    assert normalize_orientation(3.5 * math.pi) == pytest.approx(0.5 * math.pi)


@given(st.floats(-50.0, 50.0))
def test_normalize_orientation_canonical(t):
    tn = normalize_orientation(t)
    assert 0.0 <= tn < math.pi


def test_project_examples():
    assert project((3.0, 4.0), 0.0) == 4.0
    assert project((3.0, 4.0), math.pi / 2) == pytest.approx(-3.0)
    assert project((1.0, 1.0), math.pi / 4) == pytest.approx(0.0)


def test_edge_point_distance_basic():
    assert edge_point_distance(0, 0, 4, 0, 2, 1) == 1.0
    assert edge_point_distance(0, 0, 0, 2, 3, 1) == 3.0


# -- width at a fixed orientation ---------------------------------------------

def test_width_at_orientation_square():
    w, slab, _ = width_at_orientation(SQUARE, 0.0)
    assert w == 1.0
    assert (slab.lo, slab.hi) == (0.0, 1.0)
    w45, _, _ = width_at_orientation(SQUARE, math.pi / 4)
    assert w45 == pytest.approx(math.sqrt(2.0))


def test_width_at_orientation_triangle_antipodal():
    w, _, (i_lo, i_hi) = width_at_orientation(TRIANGLE, 0.0)
    assert w == 1.0
    assert i_lo == 0  # smallest index among the two base points at y=0
    assert i_hi == 2


def test_width_at_orientation_empty_errors():
    with pytest.raises(ValueError, match="empty point set"):
        width_at_orientation([], 0.0)


def test_width_at_orientation_slab_contains_all():
    rng = np.random.default_rng(7)
    pts = rand_points(rng, 60)
    tau = scale_tol(pts)
    for theta in rng.uniform(0.0, math.pi, 50):
        _, slab, _ = width_at_orientation(pts, theta)
        assert slab.contains(pts, tau).all()


# -- exact width ---------------------------------------------------------------

def test_width_exact_collinear_zero():
    w, _ = width_exact([(0, 0), (1, 1), (2, 2)])
    assert w == 0.0


def test_width_exact_square():
    w, theta = width_exact(SQUARE)
    assert w == 1.0
    assert theta in (0.0, pytest.approx(math.pi / 2))


def test_width_exact_triangle_frozen():
    # independent dense-sweep oracle at 1e6 samples reports 1.0 for this set
    w, theta = width_exact(TRIANGLE)
    assert w == 1.0
    assert theta == 0.0  # the minimizing edge is the base
    assert dense_sweep_width(TRIANGLE, 10 ** 6) == pytest.approx(1.0, rel=1e-9)


def test_width_exact_singleton():
    w, _ = width_exact([(5.0, 5.0)])
    assert w == 0.0


def test_width_exact_below_sampled_orientations():
    rng = np.random.default_rng(11)
    for _ in range(5):
        pts = rand_points(rng, 40)
        w, _ = width_exact(pts)
        ws = widths_at(pts, rng.uniform(0.0, math.pi, 1000))
        assert (w <= ws + 1e-12).all()


def test_min_width_slab_is_witness():
    rng = np.random.default_rng(13)
    pts = rand_points(rng, 50)
    slab = min_width_slab(pts)
    w, _ = width_exact(pts)
    assert slab.width >= w
    assert slab.width == pytest.approx(w, rel=1e-12)
    assert slab.contains(pts, scale_tol(pts)).all()


# -- constrained width ----------------------------------------------------------

def test_constrained_width_square():
    w, _ = constrained_width(SQUARE, 0.0, math.pi / 2)
    assert w == 1.0
    w_single, t_single = constrained_width(SQUARE, math.pi / 4, math.pi / 4)
    assert w_single == pytest.approx(math.sqrt(2.0))
    assert t_single == pytest.approx(math.pi / 4)


def test_constrained_width_triangle_frozen():
    # dense sweep over [pi/4, pi/2] shows the min sits at the left endpoint
    w, theta = constrained_width(TRIANGLE, math.pi / 4, math.pi / 2)
    assert w == pytest.approx(2.82842712474619, rel=1e-12)  # width at pi/4
    assert theta == pytest.approx(math.pi / 4)


def test_constrained_width_converges_to_exact():
    rng = np.random.default_rng(17)
    for _ in range(5):
        pts = rand_points(rng, 30)
        w_full, _ = width_exact(pts)
        w_con, _ = constrained_width(pts, 0.0, math.pi - 1e-6)
        assert w_con == pytest.approx(w_full, rel=1e-4)


def test_constrained_width_wrapped_interval():
    # [3, 0.5] wraps through pi; must match min of the two arcs
    rng = np.random.default_rng(19)
    pts = rand_points(rng, 25)
    w, _ = constrained_width(pts, 3.0, 0.5 + math.pi)
    grid = np.concatenate([np.linspace(3.0, math.pi, 20000),
                           np.linspace(0.0, 0.5, 20000)])
    assert w == pytest.approx(float(widths_at(pts, grid).min()), rel=1e-6)


def test_constrained_width_matches_dense_sweep_on_random_ranges():
    rng = np.random.default_rng(23)
    for _ in range(10):
        pts = rand_points(rng, 20)
        a = rng.uniform(0.0, math.pi)
        b = a + rng.uniform(0.0, math.pi - a)
        w, _ = constrained_width(pts, a, b)
        dense = float(widths_at(pts, np.linspace(a, b, 100001)).min())
        assert w <= dense + 1e-9  # exact is never beaten by the sampled sweep
        assert w == pytest.approx(dense, rel=1e-3)  # grid resolution bound


# -- convex hull ------------------------------------------------------------------

def test_hull_square_with_center():
    pts = np.vstack([SQUARE, [(0.5, 0.5)]])
    hull = convex_hull(pts)
    assert sorted(hull.tolist()) == [0, 1, 2, 3]


def test_hull_collinear_two_endpoints():
    hull = convex_hull([(0, 0), (1, 1), (2, 2)])
    assert sorted(hull.tolist()) == [0, 2]


def test_hull_is_ccw():
    rng = np.random.default_rng(29)
    pts = rand_points(rng, 100)
    hull = convex_hull(pts)
    hp = pts[hull]
    area2 = 0.0
    for i in range(len(hp)):
        j = (i + 1) % len(hp)
        area2 += hp[i, 0] * hp[j, 1] - hp[j, 0] * hp[i, 1]
    assert area2 > 0.0


def test_hull_matches_brute_force():
    rng = np.random.default_rng(31)
    for n in (5, 12, 50, 100):
        pts = rand_points(rng, n)
        assert set(convex_hull(pts).tolist()) == brute_force_hull(pts)


def test_hull_duplicate_points():
    hull = convex_hull([(0, 0), (1, 0), (0, 0), (1, 0), (0.5, 2.0)])
    assert sorted(hull.tolist()) == [0, 1, 4]


def test_point_in_hull():
    hull_pts = SQUARE
    inside = point_in_hull([(0.5, 0.5), (2.0, 0.5), (1.0, 1.0)], hull_pts)
    assert inside.tolist() == [True, False, True]


# -- dominance ----------------------------------------------------------------------

def test_dominates_wide_above_short_below():
    wide_above = [(-5.0, 10.0), (5.0, 10.0)]
    short_below = [(-1.0, 0.0), (1.0, 0.0)]
    assert dominates(wide_above, short_below)
    assert not dominates(short_below, wide_above)


def test_dominates_matches_region_containment():
    # derived check: rasterize the slab-intersection regions of both sets over
    # the tangent orientation range and test containment directly
    wide = np.array([(-5.0, 10.0), (5.0, 10.0)])
    short = np.array([(-1.0, 0.0), (1.0, 0.0)])
    t1, t2 = outer_tangent_orientations(wide, short)
    lo, hi = min(t1, t2), max(t1, t2)
    xs = np.linspace(-8.0, 8.0, 160)
    ys = np.linspace(-3.0, 13.0, 160)
    reg_wide = tangent_range_region(wide, lo, hi, xs, ys)
    reg_short = tangent_range_region(short, lo, hi, xs, ys)
    assert (reg_short <= reg_wide).all()  # region of short inside region of wide
    assert reg_wide.sum() > reg_short.sum()


def test_dominates_exactly_one_for_random_separable_pairs():
    rng = np.random.default_rng(37)
    for _ in range(60):
        upper = rand_points(rng, rng.integers(1, 12), 5.0) + (0.0, 20.0)
        lower = rand_points(rng, rng.integers(1, 12), 5.0)
        assert dominates(upper, lower) != dominates(lower, upper)


def test_dominates_rejects_overlapping():
    with pytest.raises(ValueError, match="hulls intersect"):
        dominates([(0, 0), (0, 10)], [(1, 5)])


def test_outer_tangent_orientations_single_points():
    # single point above single point: both tangents collapse to the segment
    tr, tl = outer_tangent_orientations([(0.0, 10.0)], [(0.0, 0.0)])
    assert tr == pytest.approx(math.pi / 2)
    assert tl == pytest.approx(math.pi / 2)


# -- diameter --------------------------------------------------------------------------

def test_diameter_2approx_pair():
    p, q = diameter_2approx([(0.0, 0.0), (10.0, 0.0)])
    assert {p, q} == {0, 1}


def test_diameter_2approx_from_interior_start():
    pts = [(0.0, 0.0), (10.0, 0.0), (5.0, 1.0)]
    p, q = diameter_2approx(pts, start=2)
    d = math.dist(pts[p], pts[q])
    assert d == pytest.approx(math.sqrt(26.0))
    assert d >= brute_force_diameter(pts) / 2.0


def test_diameter_2approx_identical_points():
    p, q = diameter_2approx([(1.0, 1.0), (1.0, 1.0)])
    assert math.dist((1.0, 1.0), (1.0, 1.0)) == 0.0
    assert p == 0 and q == 0  # degenerate pair flagged by zero distance


def test_diameter_2approx_random_guarantee():
    rng = np.random.default_rng(41)
    for _ in range(40):
        pts = rand_points(rng, rng.integers(2, 30))
        p, q = diameter_2approx(pts)
        d = math.dist(pts[p], pts[q])
        assert 2.0 * d >= brute_force_diameter(pts)


def test_diameter_2approx_too_small_errors():
    with pytest.raises(ValueError):
        diameter_2approx([(0.0, 0.0)])


# -- parallel pair at fixed orientation ----------------------------------------------

def test_min_parallel_pair_examples():
    pts = [(0.0, 0.0), (0.0, 1.0), (0.0, 9.0), (0.0, 10.0)]
    s1, s2 = min_parallel_pair_at_orientation(pts, 0.0)
    assert (s1.lo, s1.hi) == (0.0, 1.0)
    assert (s2.lo, s2.hi) == (9.0, 10.0)
    assert max(s1.width, s2.width) == all_splits_parallel_width(pts, 0.0)

    s1, s2 = min_parallel_pair_at_orientation([(0, 5), (3, 5)], 0.0)
    assert s1.width == 0.0 and s2.width == 0.0

    s1, s2 = min_parallel_pair_at_orientation([(0, 0), (0, 10)], 0.0)
    assert (s1.lo, s1.hi) == (0.0, 0.0)
    assert (s2.lo, s2.hi) == (10.0, 10.0)


def test_min_parallel_pair_optimal_on_random_inputs():
    rng = np.random.default_rng(43)
    for _ in range(50):
        pts = rand_points(rng, rng.integers(2, 40))
        theta = rng.uniform(0.0, math.pi)
        s1, s2 = min_parallel_pair_at_orientation(pts, theta)
        got = max(s1.width, s2.width)
        assert got == pytest.approx(all_splits_parallel_width(pts, theta), abs=1e-12)
        covered = s1.contains(pts, 1e-9) | s2.contains(pts, 1e-9)
        assert covered.all()


# -- slabs and solutions -----------------------------------------------------------------

def test_slab_basic():
    s = Slab(0.0, 1.0, 3.0)
    assert s.width == 2.0
    assert s.center == 2.0
    assert s.contains([(0.0, 2.5)])[0]
    assert not s.contains([(0.0, 3.5)])[0]
    with pytest.raises(ValueError):
        Slab(0.0, 3.0, 1.0)


def test_slab_expanded_and_padded():
    s = Slab(0.0, 0.0, 2.0)
    e = s.expanded(0.5)
    assert (e.lo, e.hi) == (-0.5, 2.5)
    p = s.padded_to(4.0)
    assert p.width == 4.0
    assert p.center == s.center
    assert s.padded_to(1.0) is s  # never shrinks


def test_slab_excess():
    s = Slab(0.0, 0.0, 1.0)
    assert s.excess([(0.0, 0.5)]) == 0.0
    assert s.excess([(0.0, 1.75)]) == pytest.approx(0.75)


def test_solution_cover_and_equalize():
    sol = Solution(slabs=(Slab(0.0, 0.0, 1.0), Slab(0.0, 5.0, 5.5)),
                   width=1.0, variant="parallel", mode="exact")
    pts = [(0.0, 0.2), (1.0, 5.4)]
    assert sol.covers(pts, 0.0)
    assert sol.uncovered([(0.0, 3.0)], 0.0).tolist() == [0]
    eq = sol.equalized()
    assert eq.slabs[0].width == eq.slabs[1].width == 1.0
    assert eq.covers(pts, 0.0)


def test_solution_expand_scales_width():
    sol = Solution(slabs=(Slab(0.0, 0.0, 1.0), Slab(0.0, 5.0, 6.0)),
                   width=1.0, variant="general", mode="approx", epsilon=0.2)
    ex = sol.expanded(0.2)
    assert ex.width == pytest.approx(1.2)
    assert ex.slabs[0].width == pytest.approx(1.2)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.floats(-100, 100), st.floats(-100, 100)),
                min_size=1, max_size=25))
def test_width_exact_never_exceeds_any_orientation(coords):
    pts = np.array(coords)
    w, _ = width_exact(pts)
    for theta in (0.0, 0.3, 1.1, 2.7):
        w_t, _, _ = width_at_orientation(pts, theta)
        assert w <= w_t + 1e-9 * max(1.0, w_t)
