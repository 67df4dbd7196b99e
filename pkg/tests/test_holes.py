import random
from itertools import combinations
from math import comb

import pytest

from kholes.errors import InvalidHole, RefusedScale, TooFewPoints
from kholes.generators import convex_position, horton, random_general_position
from kholes.geometry import HalfplaneSide, PointSet, side_of
from kholes.holes import (
    Hole,
    census,
    enumerate_holes_bruteforce,
    find_khole,
    is_hole,
    largest_empty_convex_polygon,
)


def _in_triangle(P, tri, q):
    a, b, c = (P[v] for v in tri)
    sides = {side_of(a, b, P[q]), side_of(b, c, P[q]), side_of(c, a, P[q])}
    return len(sides) == 1


def test_is_hole_examples(square, parabola5):
    assert is_hole(parabola5, range(5))
    assert not is_hole(square, [0, 1, 2, 3])
    # triangle (0,0),(4,0),(0,4) contains (2,1)
    assert _in_triangle(square, (0, 1, 3), 4)
    assert not is_hole(square, [0, 1, 3])
    assert not _in_triangle(square, (0, 2, 3), 4)
    assert is_hole(square, [0, 2, 3])
    # (2,1) is a vertex here, nothing else inside
    assert is_hole(square, [0, 1, 4])


def test_is_hole_rejects_non_convex(square):
    # (2,1) sits inside the corner triangle, so these four are not convex
    assert not is_hole(square, [0, 1, 3, 4])


def test_is_hole_bad_input(square):
    with pytest.raises(InvalidHole):
        is_hole(square, [0, 0, 1])
    with pytest.raises(InvalidHole):
        is_hole(square, [0, 1])
    with pytest.raises(InvalidHole):
        is_hole(square, [0, 1, 9])


def test_is_hole_matches_triangle_oracle():
    P = random_general_position(14, 21)
    for tri in combinations(range(14), 3):
        expected = not any(_in_triangle(P, tri, q) for q in range(14) if q not in tri)
        assert is_hole(P, tri) == expected


def test_bruteforce_examples(parabola5):
    assert len(enumerate_holes_bruteforce(parabola5, 4)) == 5
    assert enumerate_holes_bruteforce(parabola5, 5) == [Hole((0, 1, 2, 3, 4))]
    holes = enumerate_holes_bruteforce(random_general_position(10, 1), 5)
    assert len(holes) >= 1
    assert holes == sorted(holes)


def test_bruteforce_guard():
    P = random_general_position(17, 1)
    with pytest.raises(RefusedScale):
        enumerate_holes_bruteforce(P, 3)
    assert len(enumerate_holes_bruteforce(P, 6, allow_large=True)) == census(P)[6]


@pytest.mark.parametrize("n", range(6, 13))
def test_census_matches_bruteforce(n):
    for seed in range(15):
        P = random_general_position(n, 1000 * n + seed)
        c = census(P)
        for r in range(3, n + 1):
            assert c[r] == len(enumerate_holes_bruteforce(P, r)), (seed, r)


def test_census_small_coordinates():
    # tight grids produce many shared x / y values and near-degenerate angles
    for seed in range(30):
        P = random_general_position(11, seed, coord_range=12)
        c = census(P)
        for r in range(3, 12):
            assert c[r] == len(enumerate_holes_bruteforce(P, r))


@pytest.mark.parametrize("n", [3, 5, 10, 20])
def test_census_convex_position(n):
    c = census(convex_position(n))
    assert all(c[r] == comb(n, r) for r in range(3, n + 1))


def test_census_horton32():
    c = census(horton(5))
    assert all(c[r] == 0 for r in range(7, 33))
    assert c[6] > 0


def test_census_tiny_sets():
    assert census(PointSet([(0, 0), (1, 0)])).counts == {}
    c = census(PointSet([(0, 0), (1, 0), (0, 1)]))
    assert c.counts == {3: 1}
    assert c.lines() == ["3\t1"]


def test_census_structure():
    P = random_general_position(15, 4)
    c = census(P)
    assert c[3] >= 1
    assert c[16] == 0 and c[40] == 0
    top = c.largest()
    assert all(c[r] == 0 for r in range(top + 1, 16))
    assert c.lines()[-1].startswith(f"{top}\t")


def test_largest_empty_convex_polygon_examples():
    assert largest_empty_convex_polygon(convex_position(9)) == Hole(range(9))
    h = largest_empty_convex_polygon(horton(6))
    assert 3 <= h.k <= 6
    for seed in range(20):
        P = random_general_position(10, seed)
        assert largest_empty_convex_polygon(P).k >= 5
    with pytest.raises(TooFewPoints):
        largest_empty_convex_polygon(PointSet([(0, 0), (1, 1)]))


@pytest.mark.parametrize("seed", range(25))
def test_largest_matches_census_and_is_valid(seed):
    P = random_general_position(14 + seed % 10, seed)
    h = largest_empty_convex_polygon(P)
    assert is_hole(P, h.vertices)
    assert h.k == census(P).largest()


def test_largest_is_deterministic():
    P = random_general_position(60, 8)
    assert largest_empty_convex_polygon(P) == largest_empty_convex_polygon(P)
    assert largest_empty_convex_polygon(P) == largest_empty_convex_polygon(PointSet(list(P)))


def test_find_khole_examples():
    assert find_khole(horton(6), 7) is None
    P = convex_position(7)
    assert find_khole(P, 7) == Hole(range(7))
    # contiguous run from the smallest index in CCW order
    assert find_khole(P, 4) == Hole((0, 1, 2, 3))
    assert find_khole(P, 8) is None


def test_find_khole_left_of_eleven_edge():
    from kholes.kedges import find_initial_edge
    from kholes.geometry import points_in_halfplane
    for seed in range(20):
        P = random_general_position(30, seed)
        e = find_initial_edge(P, 12)
        left = points_in_halfplane(P, e.tail, e.head, HalfplaneSide.LEFT)
        assert len(left) == 11
        h = find_khole(P.subset(left), 5)
        assert h is not None
        assert is_hole(P, [left[v] for v in h])


def test_subset_closure():
    rng = random.Random(3)
    P = random_general_position(40, 3)
    big = largest_empty_convex_polygon(P)
    for r in range(3, big.k + 1):
        for sub in combinations(big.vertices, r):
            assert is_hole(P, sub)
    Q = random_general_position(12, 4)
    holes = enumerate_holes_bruteforce(Q, 5)
    for h in rng.sample(holes, min(5, len(holes))):
        for r in (3, 4):
            for sub in combinations(h.vertices, r):
                assert is_hole(Q, sub)


def test_hole_survives_point_removal():
    rng = random.Random(9)
    P = random_general_position(14, 9)
    for h in enumerate_holes_bruteforce(P, 5):
        keep = sorted(set(h.vertices) | set(rng.sample(range(14), 5)))
        Q = P.subset(keep)
        assert is_hole(Q, [keep.index(v) for v in h])


def test_hole_identity_and_cyclic_order():
    P = convex_position(6)
    assert Hole((3, 1, 2)) == Hole((1, 2, 3))
    assert Hole((5, 0, 2, 4)).cyclic_order(P) == [0, 2, 4, 5]
