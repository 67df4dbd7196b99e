"""k-edges and one discrete step of the clockwise rotating line.

A rotation step starts from an oriented (s-1)-edge a->a' and returns the
edge b->b' where a line that never passes over a point of P gets stuck.
The points originally on the left of the line, S = L(aa') + {a'}, stay on
its closed left side and T = R(aa') + {a} on its closed right side. The
final position is therefore the common tangent of conv(S) and conv(T)
through b in S and b' in T with S \\ {b} strictly left and T \\ {b'} strictly
right.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

from .errors import ConventionBug, RotationStuck, TooFewPoints
from .geometry import PointSet, convex_hull, cross, hull_of, left_count, radial_order_around


class Case(enum.Enum):
    CROSS = "CROSS"
    B_PRIME_IS_A = "B_PRIME_IS_A"
    B_IS_A_PRIME = "B_IS_A_PRIME"


@dataclass(frozen=True)
class EdgeInfo:
    tail: int
    head: int
    left_count: int

    def pair(self) -> tuple[int, int]:
        return (self.tail, self.head)


@dataclass(frozen=True)
class RotationResult:
    edge: EdgeInfo
    case: Case


def edge_info(P: PointSet, x: int, y: int) -> EdgeInfo:
    return EdgeInfo(x, y, left_count(P, x, y))


def find_initial_edge(P: PointSet, s: int) -> EdgeInfo:
    """The (s-1)-edge from the lexicographically smallest hull vertex a to
    the s-th point clockwise around a."""
    n = len(P)
    if n < s + 1:
        raise TooFewPoints(f"an (s-1)-edge with s={s} needs at least {s + 1} points, got {n}")
    a = convex_hull(P)[0]
    a2 = radial_order_around(P, a)[s - 1]
    e = edge_info(P, a, a2)
    if e.left_count != s - 1:
        raise ConventionBug(f"edge {a}->{a2} has {e.left_count} points on its left, expected {s - 1}")
    return e


def all_kedges(P: PointSet, k: int) -> list[EdgeInfo]:
    """Every oriented pair (x, y) with exactly k points strictly left of x->y."""
    out = []
    n = len(P)
    for x in range(n):
        dx = P.xs - P.xs[x]
        dy = P.ys - P.ys[x]
        # c[y, p] = cross(x, y, p)
        c = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        counts = np.count_nonzero(c > 0, axis=1)
        for y in np.nonzero(counts == k)[0]:
            if y != x:
                out.append(EdgeInfo(x, int(y), k))
    return out


def _cw_sector(ux, uy, vx, vy) -> int:
    # 0: same direction, 1: (0, pi) clockwise, 2: opposite, 3: (pi, 2pi)
    c = ux * vy - uy * vx
    if c < 0:
        return 1
    if c > 0:
        return 3
    return 0 if ux * vx + uy * vy > 0 else 2


def angular_less_cw(base_from, base_to, d1_from, d1_to, d2_from, d2_to) -> bool:
    """Is the clockwise angle from direction(base) to direction(d1) strictly
    smaller than to direction(d2)?

    Angles are taken in (0, 2*pi]: a direction equal to the base counts as a
    full turn. Equal directions compare as not-less.
    """
    ux, uy = base_to[0] - base_from[0], base_to[1] - base_from[1]
    v1 = (d1_to[0] - d1_from[0], d1_to[1] - d1_from[1])
    v2 = (d2_to[0] - d2_from[0], d2_to[1] - d2_from[1])
    s1 = _cw_sector(ux, uy, *v1) or 4
    s2 = _cw_sector(ux, uy, *v2) or 4
    if s1 != s2:
        return s1 < s2
    if s1 in (2, 4):
        return False
    # same open half-turn: d1 comes first iff d2 is clockwise of d1
    return v1[0] * v2[1] - v1[1] * v2[0] < 0


def case_of(a: int, a2: int, b: int, b2: int) -> Case:
    if b2 == a:
        return Case.B_PRIME_IS_A
    if b == a2:
        return Case.B_IS_A_PRIME
    return Case.CROSS


def rotation_violations(P: PointSet, edge: EdgeInfo, b: int, b2: int) -> list[str]:
    """Which of the rotation postconditions (i)-(iii) fail for a->a' => b->b',
    evaluated by counting over every point of P."""
    a, a2 = edge.tail, edge.head
    if b == b2:
        return ["degenerate edge"]
    bad = []
    ca = (P.xs[a2] - P.xs[a]) * (P.ys - P.ys[a]) - (P.ys[a2] - P.ys[a]) * (P.xs - P.xs[a])
    cb = (P.xs[b2] - P.xs[b]) * (P.ys - P.ys[b]) - (P.ys[b2] - P.ys[b]) * (P.xs - P.xs[b])
    if int(np.count_nonzero(cb > 0)) != int(np.count_nonzero(ca > 0)):
        bad.append("(i) left count changed")
    if not (ca[b] > 0 or b == a2):
        bad.append("(ii) b not in L(aa') + {a'}")
    if not (ca[b2] < 0 or b2 == a):
        bad.append("(ii) b' not in R(aa') + {a}")
    if np.any((ca < 0) & (cb > 0)):
        bad.append("(iii) wedge R(aa') & L(bb') not empty")
    if np.any((ca > 0) & (cb < 0)):
        bad.append("(iii) wedge L(aa') & R(bb') not empty")
    return bad


def _closest_cw(P: PointSet, edge: EdgeInfo, pairs) -> tuple[int, int]:
    pa, pa2 = P[edge.tail], P[edge.head]

    def cmp(e1, e2):
        if angular_less_cw(pa, pa2, P[e1[0]], P[e1[1]], P[e2[0]], P[e2[1]]):
            return -1
        if angular_less_cw(pa, pa2, P[e2[0]], P[e2[1]], P[e1[0]], P[e1[1]]):
            return 1
        return (e1 > e2) - (e1 < e2)

    return min(pairs, key=cmp_to_key(cmp))


def rotate_step(P: PointSet, edge: EdgeInfo) -> RotationResult:
    """Rotate the (s-1)-edge ``edge`` clockwise to the next (s-1)-edge.

    The answer is searched among hull vertices of S and T only and then
    re-verified against all of P.
    """
    a, a2 = edge.tail, edge.head
    ca = (P.xs[a2] - P.xs[a]) * (P.ys - P.ys[a]) - (P.ys[a2] - P.ys[a]) * (P.xs - P.xs[a])
    S = [int(i) for i in np.nonzero(ca > 0)[0]] + [a2]
    T = [int(i) for i in np.nonzero(ca < 0)[0]] + [a]
    hs = [S[i] for i in hull_of([P[i] for i in S])]
    ht = [T[i] for i in hull_of([P[i] for i in T])]
    found = []
    for b in hs:
        pb = P[b]
        for b2 in ht:
            if b == a2 and b2 == a:
                continue
            pb2 = P[b2]
            if all(cross(pb, pb2, P[q]) > 0 for q in hs if q != b) and all(
                cross(pb, pb2, P[q]) < 0 for q in ht if q != b2
            ):
                found.append((b, b2))
    if not found:
        raise RotationStuck(f"no rotation target from edge {a}->{a2}")
    b, b2 = _closest_cw(P, edge, found)
    bad = rotation_violations(P, edge, b, b2)
    if bad:
        raise ConventionBug(f"rotation {a}->{a2} => {b}->{b2} violates: {'; '.join(bad)}")
    return RotationResult(EdgeInfo(b, b2, edge.left_count), case_of(a, a2, b, b2))


def rotate_step_bruteforce(P: PointSet, edge: EdgeInfo) -> RotationResult:
    """Reference rotation: scan every ordered pair, keep those satisfying
    (i)-(iii), return the one with the least clockwise turn from a->a'."""
    a, a2 = edge.tail, edge.head
    n = len(P)
    ca = (P.xs[a2] - P.xs[a]) * (P.ys - P.ys[a]) - (P.ys[a2] - P.ys[a]) * (P.xs - P.xs[a])
    target = int(np.count_nonzero(ca > 0))
    left_a = ca > 0
    right_a = ca < 0
    found = []
    for b in range(n):
        if not (left_a[b] or b == a2):
            continue
        dx = P.xs - P.xs[b]
        dy = P.ys - P.ys[b]
        c = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]  # c[b2, p]
        counts = np.count_nonzero(c > 0, axis=1)
        wedge = np.any((c > 0) & right_a[None, :], axis=1) | np.any((c < 0) & left_a[None, :], axis=1)
        for b2 in range(n):
            if b2 == b or not (right_a[b2] or b2 == a):
                continue
            if counts[b2] == target and not wedge[b2]:
                found.append((b, b2))
    if not found:
        raise RotationStuck(f"no rotation target from edge {a}->{a2}")
    b, b2 = _closest_cw(P, edge, found)
    return RotationResult(EdgeInfo(b, b2, edge.left_count), case_of(a, a2, b, b2))
