"""Convex hull chains for vertically sliding point windows.

The fixed-orientation sweep moves a horizontal slab downward through a point
set sorted by decreasing (y, x).  The set above the slab only ever gains
points, each below all previous ones, and the set below it only ever loses
its topmost point.  Both special cases admit two-chain hull maintenance in
amortized constant time per update: insertions pop a suffix of each chain,
and deletions undo the pops recorded when the hull was prebuilt in reverse.

``WindowHull`` is the general-purpose structure accepting either update; it
repairs insertions incrementally and rebuilds its chains on deletion, which
keeps every operation linear in the window size.  The sweep itself uses the
two specialised classes, whose chains it reads directly.

All chains store indices into a pair of flat coordinate lists so the sweep
can run its cross products on plain floats.  Equal-y ties follow the
lexicographic (y, x) order used everywhere else: "below" means smaller
(y, x), never a repeated point.
"""

from __future__ import annotations

import numpy as np

from .geom import as_points

__all__ = [
    "ChainCycle",
    "GrowingHull",
    "ShrinkingHull",
    "WindowHull",
    "window_hull_update",
]


def _push(xs: list, ys: list, chain: list, i: int, sign: float) -> list:
    """Append vertex i to a monotone chain, popping the broken suffix.

    ``sign`` selects the turn kept: +1 keeps left turns (a chain traversed
    in counterclockwise order), -1 keeps right turns.  Collinear triples are
    popped, so chains hold only extreme vertices.  Returns the popped
    indices in pop order; callers that never undo ignore them.
    """
    xi = xs[i]
    yi = ys[i]
    popped = []
    while len(chain) > 1:
        a = chain[-2]
        b = chain[-1]
        turn = (xs[b] - xs[a]) * (yi - ys[a]) - (ys[b] - ys[a]) * (xi - xs[a])
        if sign * turn <= 0.0:
            popped.append(chain.pop())
        else:
            break
    chain.append(i)
    return popped


class GrowingHull:
    """Hull of a set receiving points in strictly decreasing (y, x) order.

    ``left`` and ``right`` run from the topmost point down to the newest
    one and share both endpoints.  Traversing ``left`` downward then
    ``right`` upward walks the hull counterclockwise.
    """

    __slots__ = ("xs", "ys", "left", "right", "_last")

    def __init__(self, xs: list, ys: list):
        self.xs = xs
        self.ys = ys
        self.left: list = []
        self.right: list = []
        self._last = -1

    def __len__(self) -> int:
        if not self.left:
            return 0
        n = len(self.left) + len(self.right) - 2
        return n if n > 0 else 1

    def insert_below(self, i: int) -> None:
        last = self._last
        if last >= 0:
            key_new = (self.ys[i], self.xs[i])
            key_old = (self.ys[last], self.xs[last])
            if key_new >= key_old:
                raise ValueError("insert must be strictly below the current hull")
        _push(self.xs, self.ys, self.left, i, 1.0)
        _push(self.xs, self.ys, self.right, i, -1.0)
        self._last = i

    def vertices(self) -> list:
        """Hull indices in counterclockwise order, topmost first."""
        if not self.left:
            return []
        if len(self.left) + len(self.right) == 2:
            return [self.left[0]]
        return self.left[:-1] + self.right[:0:-1] if len(self.right) > 1 else self.left[:]


class ShrinkingHull:
    """Hull of a set losing its topmost point one deletion at a time.

    The full set is prebuilt bottom-up in increasing (y, x) order while
    recording the vertices each insertion popped.  Deleting the topmost
    point pops it off both chains and replays those vertices, exactly
    undoing the prebuild step.  ``left``/``right`` run bottom to top and
    share both endpoints; ``right`` upward then ``left`` downward is the
    counterclockwise order.
    """

    __slots__ = ("xs", "ys", "left", "right", "_undo", "_size")

    def __init__(self, xs: list, ys: list, ascending: list):
        self.xs = xs
        self.ys = ys
        self.left: list = []
        self.right: list = []
        self._undo: list = []
        for i in ascending:
            pl = _push(xs, ys, self.left, i, -1.0)
            pr = _push(xs, ys, self.right, i, 1.0)
            self._undo.append((pl, pr))
        self._size = len(ascending)

    def __len__(self) -> int:
        return self._size

    def delete_topmost(self) -> int:
        if self._size == 0:
            raise ValueError("delete from an empty hull")
        pl, pr = self._undo.pop()
        top = self.left.pop()
        self.right.pop()
        self.left.extend(reversed(pl))
        self.right.extend(reversed(pr))
        self._size -= 1
        return top

    def vertices(self) -> list:
        """Hull indices in counterclockwise order, bottommost first."""
        if not self.left:
            return []
        if len(self.left) + len(self.right) == 2:
            return [self.left[0]]
        return self.right[:-1] + self.left[:0:-1] if len(self.left) > 1 else self.right[:]


class ChainCycle:
    """Constant-time neighbour steps around a two-chain hull.

    ``ca`` then ``cb`` reversed (endpoints shared) is the counterclockwise
    vertex cycle; for a growing hull pass (left, right), for a shrinking
    hull (right, left).  Handles are (side, pos) pairs kept canonical: the
    shared endpoints always live on side 0, so a handle on side 1 has
    0 < pos < len(cb) - 1.  Chain suffix updates never move a surviving
    vertex, so a handle stays valid while its vertex stays on the hull;
    ``alive`` detects the stale case.
    """

    __slots__ = ("ca", "cb")

    def __init__(self, ca: list, cb: list):
        self.ca = ca
        self.cb = cb

    def __len__(self) -> int:
        n = len(self.ca) + len(self.cb)
        return n - 2 if n > 2 else len(self.ca)

    def vertex(self, h: tuple) -> int:
        return self.ca[h[1]] if h[0] == 0 else self.cb[h[1]]

    def alive(self, h: tuple, idx: int) -> bool:
        chain = self.ca if h[0] == 0 else self.cb
        return h[1] < len(chain) and chain[h[1]] == idx

    def first(self) -> tuple:
        return (0, 0)

    def last(self) -> tuple:
        return (0, len(self.ca) - 1)

    def ccw(self, h: tuple) -> tuple:
        side, pos = h
        if side == 0:
            if pos + 1 < len(self.ca):
                return (0, pos + 1)
            pos = len(self.cb) - 2
            return (1, pos) if pos > 0 else (0, 0)
        return (1, pos - 1) if pos > 1 else (0, 0)

    def cw(self, h: tuple) -> tuple:
        side, pos = h
        if side == 0:
            if pos > 0:
                return (0, pos - 1)
            if len(self.cb) > 2:
                return (1, 1)
            return (0, len(self.ca) - 1)
        if pos + 1 < len(self.cb) - 1:
            return (1, pos + 1)
        return (0, len(self.ca) - 1)

    def handles(self):
        """Yield every (handle, vertex) once, cycle order not guaranteed."""
        for pos, idx in enumerate(self.ca):
            yield (0, pos), idx
        for pos in range(1, len(self.cb) - 1):
            yield (1, pos), self.cb[pos]


class WindowHull:
    """Hull of a window supporting insert-below and delete-topmost.

    Points live in a descending (y, x) array; the hull chains are repaired
    incrementally on insertion and rebuilt on deletion.  After every update
    the hull equals a fresh convex hull of the window, which is the
    invariant the randomized tests check.
    """

    def __init__(self, points=None):
        self._xs: list = []
        self._ys: list = []
        self._left: list = []
        self._right: list = []
        if points is not None:
            for p in np.asarray(points, dtype=float):
                self.insert((float(p[0]), float(p[1])))

    def __len__(self) -> int:
        return len(self._xs)

    def insert(self, point) -> None:
        x, y = float(point[0]), float(point[1])
        if not (np.isfinite(x) and np.isfinite(y)):
            raise ValueError("window points must be finite")
        if self._xs and (y, x) >= (self._ys[-1], self._xs[-1]):
            raise ValueError("insert must be strictly below the current window")
        self._xs.append(x)
        self._ys.append(y)
        i = len(self._xs) - 1
        _push(self._xs, self._ys, self._left, i, 1.0)
        _push(self._xs, self._ys, self._right, i, -1.0)

    def delete_topmost(self) -> tuple:
        if not self._xs:
            raise ValueError("delete from an empty window")
        top = (self._xs.pop(0), self._ys.pop(0))
        self._left = []
        self._right = []
        for i in range(len(self._xs)):
            _push(self._xs, self._ys, self._left, i, 1.0)
            _push(self._xs, self._ys, self._right, i, -1.0)
        return top

    def points(self) -> np.ndarray:
        return np.column_stack((self._xs, self._ys)) if self._xs else np.empty((0, 2))

    def hull_points(self) -> np.ndarray:
        """Hull vertices in the counterclockwise order of ``convex_hull``."""
        if not self._xs:
            return np.empty((0, 2))
        if len(self._left) + len(self._right) == 2:
            seq = [self._left[0]]
        elif len(self._right) > 1:
            seq = self._left[:-1] + self._right[:0:-1]
        else:
            seq = self._left[:]
        pts = self.points()
        hull = pts[seq]
        # convex_hull starts at the lexicographic minimum; rotate to match.
        start = int(np.lexsort((hull[:, 1], hull[:, 0]))[0])
        return np.roll(hull, -start, axis=0)


def window_hull_update(h: WindowHull, event) -> WindowHull:
    """Apply one window event, ("insert", point) or ("delete",), in place.

    Discipline violations (insert not strictly below, delete from empty)
    and malformed events raise ValueError.  Returns the updated hull so
    calls chain.
    """
    if not isinstance(event, tuple) or not event:
        raise ValueError("event must be a nonempty tuple")
    kind = event[0]
    if kind == "insert":
        if len(event) != 2:
            raise ValueError("insert event needs exactly one point")
        pt = as_points([event[1]])[0]
        h.insert((pt[0], pt[1]))
    elif kind == "delete":
        if len(event) != 1:
            raise ValueError("delete event carries no payload")
        h.delete_topmost()
    else:
        raise ValueError(f"unknown window event {kind!r}")
    return h
