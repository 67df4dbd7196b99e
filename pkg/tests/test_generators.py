import pytest

from kholes.errors import GridTooTight, InputError, NotHortonShaped
from kholes.generators import (
    Family,
    GeneratorSpec,
    convex_position,
    generate,
    horton,
    horton_offsets,
    horton_property_check,
    random_general_position,
)
from kholes.geometry import COORD_BOUND, PointSet, convex_hull, format_points
from kholes.holes import census, largest_empty_convex_polygon


def test_horton_small():
    P = horton(2)
    assert len(P) == 4
    assert census(P).largest() <= 4


@pytest.mark.parametrize("m", range(1, 7))
def test_horton_self_check(m):
    P = horton(m)
    assert sorted(p.x for p in P) == list(range(2**m))
    assert horton_property_check(P)


def test_horton_no_seven_holes():
    c = census(horton(6))
    assert all(c[r] == 0 for r in range(7, 65))
    assert largest_empty_convex_polygon(horton(5)).k <= 6


def test_horton_largest_exponent_fits_bound():
    P = horton(7)
    assert len(P) == 128
    assert max(abs(p.y) for p in P) <= COORD_BOUND
    with pytest.raises(InputError):
        horton(8)


def test_horton_offsets_are_powers_of_two():
    offs = horton_offsets(6)
    assert offs == [1, 1, 2, 16, 256, 8192]
    assert all(d & (d - 1) == 0 for d in offs)


def test_horton_mutation_detected():
    m = 5
    pts = [list(p) for p in horton(m)]
    top = horton_offsets(m)[-1]
    # an odd-x point dragged back down by the top-level lift
    pts[5][1] -= top
    assert not horton_property_check(pts)


def test_horton_check_rejects_wrong_shape():
    with pytest.raises(NotHortonShaped):
        horton_property_check(convex_position(3))
    with pytest.raises(NotHortonShaped):
        horton_property_check([(0, 0), (1, 1), (3, 0), (4, 2)])
    assert horton_property_check(convex_position(4)) is False


def test_random_is_deterministic():
    a = random_general_position(50, 123)
    b = random_general_position(50, 123)
    assert format_points(a) == format_points(b)
    assert a != random_general_position(50, 124)


def test_random_pins_stream():
    # frozen output of the PCG64 raw stream + rejection mapping
    assert random_general_position(4, 0, 100).as_lists() == [[-14, 48], [-5, 73], [-82, 96], [-37, -84]]
    assert random_general_position(3, 2**64 - 1, 10**7).as_lists() == [
        [-2872273, 6878574], [202163, -2624350], [4413984, -3137859]
    ]


def test_random_is_general_position():
    for seed in range(5):
        P = random_general_position(200, seed)
        PointSet(list(P))  # re-validates from scratch
        assert all(abs(p.x) <= 10**6 and abs(p.y) <= 10**6 for p in P)


def test_random_tight_grid():
    P = random_general_position(8, 1, coord_range=5)
    PointSet(list(P))
    with pytest.raises(GridTooTight):
        random_general_position(40, 1, coord_range=3)


def test_random_sampled_harborth():
    assert census(random_general_position(10, 1))[5] >= 1
    for seed in range(30):
        assert census(random_general_position(12, seed))[5] >= 3


def test_convex_position():
    c = census(convex_position(5))
    assert c[4] == 5 and c[5] == 1
    assert len(convex_hull(convex_position(8))) == 8
    P = convex_position(3162)
    assert max(p.y for p in P) <= COORD_BOUND
    with pytest.raises(InputError):
        convex_position(3163)
    with pytest.raises(InputError):
        convex_position(2)


def test_generator_spec():
    assert generate(GeneratorSpec(Family.HORTON, 16)) == horton(4)
    assert generate(GeneratorSpec(Family.CONVEX, 7)) == convex_position(7)
    assert generate(GeneratorSpec(Family.RANDOM, 9, seed=4)) == random_general_position(9, 4)
    with pytest.raises(InputError):
        GeneratorSpec(Family.HORTON, 12)
    with pytest.raises(InputError):
        GeneratorSpec(Family.RANDOM, 10, coord_range=COORD_BOUND + 1)
