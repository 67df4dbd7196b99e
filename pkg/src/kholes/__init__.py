"""Exact k-hole (empty convex polygon) counting and lower-bound certificates."""

__version__ = "0.1.0"

from .certify import (
    PRESETS,
    Caps,
    Certificate,
    CheckReport,
    StripRound,
    TheoremParams,
    check_certificate,
    extract_certificate,
    known_bounds,
    theorem2_bound,
)
from .generators import convex_position, horton, horton_property_check, random_general_position
from .geometry import (
    HalfplaneSide,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    left_count,
    orientation,
    points_in_halfplane,
    radial_order_around,
    side_of,
)
from .holes import (
    Hole,
    HoleCensus,
    census,
    enumerate_holes_bruteforce,
    find_khole,
    is_hole,
    largest_empty_convex_polygon,
)
from .kedges import Case, EdgeInfo, RotationResult, angular_less_cw, find_initial_edge, rotate_step
