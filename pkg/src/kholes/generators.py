"""Point-set families: Horton sets, seeded random sets in general position,
and parabola (convex position) sets."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import GridTooTight, InputError, NotHortonShaped, OffsetTooSmall
from .geometry import COORD_BOUND, Point, PointSet

HORTON_MAX_EXPONENT = 7
CONVEX_MAX_N = 3162


class Family(enum.Enum):
    HORTON = "horton"
    RANDOM = "random"
    CONVEX = "convex"


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int
    seed: int = 0
    coord_range: int = 10**6

    def __post_init__(self):
        if self.coord_range > COORD_BOUND:
            raise InputError(f"coord_range {self.coord_range} exceeds {COORD_BOUND}")
        if self.family is Family.HORTON and (self.n < 2 or self.n & (self.n - 1)):
            raise InputError(f"Horton sets need n a power of two, got {self.n}")
        if self.family is Family.CONVEX and not 3 <= self.n <= CONVEX_MAX_N:
            raise InputError(f"convex_position needs 3 <= n <= {CONVEX_MAX_N}, got {self.n}")


def generate(spec: GeneratorSpec) -> PointSet:
    if spec.family is Family.HORTON:
        return horton(spec.n.bit_length() - 1)
    if spec.family is Family.RANDOM:
        return random_general_position(spec.n, spec.seed, spec.coord_range)
    return convex_position(spec.n)


# -- Horton -------------------------------------------------------------------

def _min_offset(lower: np.ndarray, upper: np.ndarray) -> int:
    """Smallest integer D such that lifting ``upper`` by D puts it strictly
    above every line through two ``lower`` points and keeps ``lower`` strictly
    below every line through two lifted ``upper`` points.

    Both point arrays are (m, 2), sorted by x with distinct x.
    """
    need = 1
    for a, b in ((lower, upper), (upper, lower)):
        i, j = np.triu_indices(len(a), 1)
        dx = a[j, 0] - a[i, 0]
        dy = a[j, 1] - a[i, 1]
        # c = cross(a_i, a_j, q) for every pair line and every q of b
        c = dx[:, None] * (b[None, :, 1] - a[i, 1][:, None]) - dy[:, None] * (b[None, :, 0] - a[i, 0][:, None])
        if a is lower:
            # need c + dx*D > 0  ->  D > -c/dx
            bound = (-c) // dx[:, None] + 1
        else:
            # need c - dx*D < 0  ->  D > c/dx
            bound = c // dx[:, None] + 1
        if bound.size:
            need = max(need, int(bound.max()))
    return need


def horton_offsets(m: int) -> list[int]:
    """Vertical lifts used at each doubling step of ``horton(m)``: each is the
    smallest power of two at or above the exact minimum lift."""
    return _horton_build(m)[1]


def _horton_build(m: int):
    pts = np.zeros((1, 2), dtype=np.int64)
    offsets = []
    for _ in range(m):
        even = pts.copy()
        even[:, 0] *= 2
        odd = pts.copy()
        odd[:, 0] = 2 * odd[:, 0] + 1
        d = 1 << (_min_offset(even, odd) - 1).bit_length()
        odd[:, 1] += d
        offsets.append(d)
        pts = np.concatenate([even, odd])
        pts = pts[np.argsort(pts[:, 0])]
    return pts, offsets


def horton(m: int) -> PointSet:
    """Horton set of 2**m points with x-coordinates 0..2**m - 1.

    Even-x points form a Horton set; odd-x points form a Horton set lifted by
    ``horton_offsets(m)[-1]`` so that each half lies strictly on the far side
    of every line through two points of the other.
    """
    if not 1 <= m <= HORTON_MAX_EXPONENT:
        raise InputError(
            f"Horton exponent must be in 1..{HORTON_MAX_EXPONENT} to respect |coord| <= {COORD_BOUND}, got {m}"
        )
    pts, _ = _horton_build(m)
    if int(pts[:, 1].max()) > COORD_BOUND:
        raise InputError(f"horton({m}) exceeds the coordinate bound")
    if not horton_property_check(pts.tolist()):
        raise OffsetTooSmall(f"horton({m}) failed its structural validation")
    return PointSet([Point(int(x), int(y)) for x, y in pts])


def _strictly_separated(lower: np.ndarray, upper: np.ndarray) -> bool:
    for a, b, sign in ((lower, upper, 1), (upper, lower, -1)):
        if len(a) < 2:
            continue
        i, j = np.triu_indices(len(a), 1)
        dx = a[j, 0] - a[i, 0]
        dy = a[j, 1] - a[i, 1]
        c = dx[:, None] * (b[None, :, 1] - a[i, 1][:, None]) - dy[:, None] * (b[None, :, 0] - a[i, 0][:, None])
        if not np.all(sign * c > 0):
            return False
    return True


def horton_property_check(P) -> bool:
    """Recursive Horton condition on a point set with x-coordinates 0..n-1.

    At every level the even-position and odd-position halves (in x order)
    must be strictly separated: the odd half above every line through two
    even points, the even half below every line through two odd points.
    """
    arr = np.array([[p[0], p[1]] for p in P], dtype=np.int64).reshape(-1, 2)
    n = len(arr)
    if n == 0 or n & (n - 1):
        raise NotHortonShaped(f"size {n} is not a power of two")
    arr = arr[np.argsort(arr[:, 0], kind="stable")]
    if not np.array_equal(arr[:, 0], np.arange(n)):
        raise NotHortonShaped("x-coordinates are not a permutation of 0..n-1")

    def rec(a: np.ndarray) -> bool:
        if len(a) <= 2:
            return True
        even, odd = a[0::2], a[1::2]
        return _strictly_separated(even, odd) and rec(even) and rec(odd)

    return rec(arr)


# -- random -------------------------------------------------------------------

class _UniformInts:
    """Uniform integers in [-r, r] from the raw 64-bit PCG64 stream, by
    rejection sampling; pinned so outputs are reproducible."""

    def __init__(self, seed: int, r: int):
        self._bits = np.random.PCG64(seed)
        self._r = r
        self._span = 2 * r + 1
        self._limit = (2**64 // self._span) * self._span

    def draw(self) -> int:
        while True:
            v = int(self._bits.random_raw())
            if v < self._limit:
                return v % self._span - self._r


def _completes_degeneracy(xs: np.ndarray, ys: np.ndarray, x: int, y: int) -> bool:
    dx = xs - x
    dy = ys - y
    if np.any((dx == 0) & (dy == 0)):
        return True
    g = np.gcd(dx, dy)
    dx = dx // g
    dy = dy // g
    flip = (dx < 0) | ((dx == 0) & (dy < 0))
    dx[flip] = -dx[flip]
    dy[flip] = -dy[flip]
    key = (dx + 2**26) * 2**27 + (dy + 2**26)
    return np.unique(key).size != key.size


def random_general_position(n: int, seed: int, coord_range: int = 10**6) -> PointSet:
    """n points uniform on [-coord_range, coord_range]^2 in general position.

    Coordinates come from PCG64(seed) raw outputs, x then y per candidate;
    a candidate that duplicates a point or completes a collinear triple is
    discarded and redrawn.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if not 1 <= coord_range <= COORD_BOUND:
        raise InputError(f"coord_range must be in 1..{COORD_BOUND}, got {coord_range}")
    rng = _UniformInts(seed, coord_range)
    xs = np.empty(n, dtype=np.int64)
    ys = np.empty(n, dtype=np.int64)
    budget = 1000 + 10 * n
    k = 0
    while k < n:
        x, y = rng.draw(), rng.draw()
        if k and _completes_degeneracy(xs[:k], ys[:k], x, y):
            budget -= 1
            if budget < 0:
                raise GridTooTight(f"could not place {n} points on a grid of radius {coord_range}")
            continue
        xs[k], ys[k] = x, y
        k += 1
    return PointSet.trusted([Point(int(a), int(b)) for a, b in zip(xs, ys)])


def convex_position(n: int) -> PointSet:
    """Points (i, i^2) for i = 0..n-1."""
    if not 3 <= n <= CONVEX_MAX_N:
        raise InputError(f"convex_position needs 3 <= n <= {CONVEX_MAX_N}, got {n}")
    return PointSet.trusted([Point(i, i * i) for i in range(n)])
