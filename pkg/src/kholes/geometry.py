"""Exact integer predicates and basic constructions on planar point sets.

All arithmetic is on Python or numpy int64 integers. Coordinates are bounded
by ``COORD_BOUND`` so every orientation determinant (at most 8e14 in absolute
value) is exact in 64-bit arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CollinearTriple,
    CoordinateOutOfRange,
    DuplicatePoint,
    InputError,
    NotHullVertex,
    TooFewPoints,
)

COORD_BOUND = 10**7


class Orientation(enum.Enum):
    CCW = 1
    CW = -1


class HalfplaneSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        for v in (self.x, self.y):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InputError(f"coordinate {v!r} is not an integer")
        if abs(self.x) > COORD_BOUND or abs(self.y) > COORD_BOUND:
            raise CoordinateOutOfRange(
                f"point ({self.x}, {self.y}) exceeds |coord| <= {COORD_BOUND}"
            )
        object.__setattr__(self, "x", int(self.x))
        object.__setattr__(self, "y", int(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __getitem__(self, i):
        return (self.x, self.y)[i]


def cross(p, q, r) -> int:
    """Twice the signed area of triangle pqr (positive for a left turn)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


class PointSet:
    """An immutable, indexed point set in general position.

    Index ``i`` is the identity of ``points[i]`` for every downstream
    operation. Construction rejects duplicates and collinear triples.
    """

    __slots__ = ("points", "xs", "ys")

    def __init__(self, points: Iterable, *, validate: bool = True):
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        self.points = pts
        self.xs = np.fromiter((p.x for p in pts), dtype=np.int64, count=len(pts))
        self.ys = np.fromiter((p.y for p in pts), dtype=np.int64, count=len(pts))
        if validate:
            self._check_general_position()

    def _check_general_position(self) -> None:
        n = len(self.points)
        seen = {}
        for i, p in enumerate(self.points):
            if p in seen:
                raise DuplicatePoint(f"points {seen[p]} and {i} coincide at {tuple(p)}")
            seen[p] = i
        # For each anchor i, a collinear triple i < j < l shows up as two equal
        # reduced directions from i.
        for i in range(n - 2):
            dx = self.xs[i + 1:] - self.xs[i]
            dy = self.ys[i + 1:] - self.ys[i]
            g = np.gcd(dx, dy)
            dx //= g
            dy //= g
            flip = (dx < 0) | ((dx == 0) & (dy < 0))
            dx[flip] = -dx[flip]
            dy[flip] = -dy[flip]
            key = (dx + 2**26) * 2**27 + (dy + 2**26)
            order = np.argsort(key, kind="stable")
            sk = key[order]
            dup = np.nonzero(sk[1:] == sk[:-1])[0]
            if dup.size:
                j = i + 1 + int(order[dup[0]])
                l = i + 1 + int(order[dup[0] + 1])
                j, l = sorted((j, l))
                raise CollinearTriple(self.points[i], self.points[j], self.points[l])

    @classmethod
    def trusted(cls, points: Sequence[Point]) -> "PointSet":
        """Wrap points already known to be in general position."""
        return cls(points, validate=False)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        """The sub-point-set ``indices`` (local index j is ``indices[j]``)."""
        return PointSet.trusted([self.points[i] for i in indices])

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet(n={len(self.points)})"

    def as_lists(self) -> list[list[int]]:
        return [[p.x, p.y] for p in self.points]


def orientation(p, q, r) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    raise CollinearTriple(p, q, r)


def side_of(x, y, p) -> HalfplaneSide:
    """Which open halfplane of the line x->y contains p."""
    if orientation(x, y, p) is Orientation.CCW:
        return HalfplaneSide.LEFT
    return HalfplaneSide.RIGHT


def _cross_to_all(P: PointSet, x: int, y: int) -> np.ndarray:
    px, py = P.xs[x], P.ys[x]
    return (P.xs[y] - px) * (P.ys - py) - (P.ys[y] - py) * (P.xs - px)


def left_count(P: PointSet, x: int, y: int) -> int:
    """Number of points of P strictly left of the oriented line x->y."""
    if x == y:
        raise ValueError("left_count needs two distinct indices")
    return int(np.count_nonzero(_cross_to_all(P, x, y) > 0))


def points_in_halfplane(P: PointSet, x: int, y: int, side: HalfplaneSide) -> list[int]:
    if x == y:
        raise ValueError("points_in_halfplane needs two distinct indices")
    c = _cross_to_all(P, x, y)
    mask = c > 0 if side is HalfplaneSide.LEFT else c < 0
    return [int(i) for i in np.nonzero(mask)[0]]


def hull_of(coords: Sequence) -> list[int]:
    """Monotone-chain hull of a list of (x, y) pairs, CCW from the lexicographic
    minimum. Accepts fewer than three points (returns them sorted)."""
    order = sorted(range(len(coords)), key=lambda i: (coords[i][0], coords[i][1]))
    if len(order) < 3:
        return order
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(coords[lower[-2]], coords[lower[-1]], coords[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(coords[upper[-2]], coords[upper[-1]], coords[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def convex_hull(P: PointSet) -> list[int]:
    """Hull vertex indices in CCW order, starting at the lexicographically
    smallest point."""
    if len(P) < 3:
        raise TooFewPoints(f"convex hull needs at least 3 points, got {len(P)}")
    return hull_of(P.points)


def radial_order_around(P: PointSet, a: int) -> list[int]:
    """The other points sorted clockwise around hull vertex ``a``.

    The first entry is the hull neighbour of ``a`` that has every other point
    on its right (the clockwise neighbour); each later entry is clockwise of
    the previous one. Consequently the first ``m`` entries are exactly the
    points left of the line from ``a`` to entry ``m + 1``.
    """
    if a not in set(convex_hull(P)):
        raise NotHullVertex(f"point {a} is not a convex hull vertex")
    pa = P[a]

    def cmp(u, v):
        # u precedes v when v is clockwise of u as seen from a
        return -1 if cross(pa, P[u], P[v]) < 0 else 1

    return sorted((i for i in range(len(P)) if i != a), key=cmp_to_key(cmp))


def parse_points(text: str) -> PointSet:
    pts = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer coordinate in {line!r}") from None
        pts.append(Point(x, y))
    return PointSet(pts)


def format_points(P: PointSet) -> str:
    return "".join(f"{p.x} {p.y}\n" for p in P)


def read_points(path) -> PointSet:
    return parse_points(Path(path).read_text())


def write_points(P: PointSet, path) -> None:
    Path(path).write_text(format_points(P))
