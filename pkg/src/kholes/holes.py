"""Empty convex polygons (k-holes): validation, brute-force enumeration,
census by size and the largest empty convex polygon."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional

import numpy as np

from . import _dp
from .errors import InvalidHole, RefusedScale, TooFewPoints
from .geometry import PointSet, cross, hull_of

BRUTEFORCE_LIMIT = 16


@dataclass(frozen=True, order=True)
class Hole:
    """A k-hole identified by its sorted vertex indices."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(int(v) for v in self.vertices)))

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __contains__(self, i) -> bool:
        return i in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    def cyclic_order(self, P: PointSet) -> list[int]:
        """Vertices in CCW order starting from the smallest index."""
        pts = [P[v] for v in self.vertices]
        order = [self.vertices[i] for i in hull_of(pts)]
        s = order.index(min(order))
        return order[s:] + order[:s]


@dataclass
class HoleCensus:
    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, r: int) -> int:
        return self.counts.get(r, 0)

    def largest(self) -> int:
        return max((r for r, c in self.counts.items() if c > 0), default=0)

    def lines(self) -> list[str]:
        """``r<TAB>count`` lines, ascending, trailing zero sizes omitted."""
        top = self.largest()
        return [f"{r}\t{self.counts.get(r, 0)}" for r in range(3, top + 1)]


def is_hole(P: PointSet, vertices: Iterable[int]) -> bool:
    """True iff ``vertices`` are in strictly convex position and no other point
    of ``P`` lies strictly inside their convex hull."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise InvalidHole(f"duplicate indices in {vs}")
    if len(vs) < 3:
        raise InvalidHole(f"a hole needs at least 3 vertices, got {len(vs)}")
    n = len(P)
    if any(not 0 <= v < n for v in vs):
        raise InvalidHole(f"vertex index out of range in {vs}")
    pts = [P[v] for v in vs]
    hull = [pts[i] for i in hull_of(pts)]
    if len(hull) != len(vs):
        return False
    xlo = min(p.x for p in hull)
    xhi = max(p.x for p in hull)
    ylo = min(p.y for p in hull)
    yhi = max(p.y for p in hull)
    edges = list(zip(hull, hull[1:] + hull[:1]))
    members = set(vs)
    for i, q in enumerate(P.points):
        if i in members or not (xlo < q.x < xhi and ylo < q.y < yhi):
            continue
        if all(cross(a, b, q) > 0 for a, b in edges):
            return False
    return True


def enumerate_holes_bruteforce(P: PointSet, k: int, *, allow_large: bool = False) -> list[Hole]:
    """All k-holes by testing every k-subset; lexicographic order."""
    n = len(P)
    if n > BRUTEFORCE_LIMIT and not allow_large:
        raise RefusedScale(
            f"brute force over {n} points refused (limit {BRUTEFORCE_LIMIT}); pass allow_large=True"
        )
    if k < 3:
        raise InvalidHole(f"hole size must be at least 3, got {k}")
    return [Hole(c) for c in combinations(range(n), k) if is_hole(P, c)]


def _lecp_vertices(P: PointSet) -> np.ndarray:
    return _dp.largest_chain(P.xs, P.ys)


def census(P: PointSet) -> HoleCensus:
    """Number of r-holes of P for every 3 <= r <= n."""
    n = len(P)
    if n < 3:
        return HoleCensus({})
    rmax = len(_lecp_vertices(P))
    raw = _dp.hole_counts(P.xs, P.ys, rmax)
    # Each r-hole has r sub-holes of size r-1 and each (r-1)-hole extends in at
    # most n-r+1 ways, so h_r <= h_{r-1} (n-r+1) / r. With h_{r-1} exact this
    # certifies that the int64 count h_r did not overflow.
    if comb(n, 3) >= 2**63:
        raise RefusedScale(f"triangle count for n={n} exceeds 64 bits")
    for r in range(4, rmax + 1):
        if int(raw[r - 1]) * (n - r + 1) // r >= 2**63:
            raise RefusedScale(f"{r}-hole count for n={n} may exceed 64 bits")
    return HoleCensus({r: (int(raw[r]) if r <= rmax else 0) for r in range(3, n + 1)})


def largest_empty_convex_polygon(P: PointSet) -> Hole:
    """One maximum-size hole.

    Tie-break (stable across runs): among maximum holes, the one whose lowest
    vertex has the smallest index; then the first chain end edge in angular
    order around that vertex; then the angularly earliest predecessor.
    """
    if len(P) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(P)}")
    return Hole(_lecp_vertices(P).tolist())


def contiguous_subhole(P: PointSet, hole: Hole, k: int, start: int = 0) -> Hole:
    """The ``k`` consecutive vertices of ``hole`` in CCW order, beginning at
    position ``start`` counted from its smallest-index vertex."""
    ring = hole.cyclic_order(P)
    return Hole([ring[(start + j) % len(ring)] for j in range(k)])


def find_khole(P: PointSet, k: int) -> Optional[Hole]:
    """A k-hole of P taken from its largest empty convex polygon, or None."""
    if len(P) < max(k, 3):
        return None
    big = largest_empty_convex_polygon(P)
    if big.k < k:
        return None
    return contiguous_subhole(P, big, k)
