"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI prints it verbatim so
scripts can match on it.
"""


class KHoleError(Exception):
    code = "E_KHOLE"


class InputError(KHoleError):
    """Malformed or out-of-contract input (bad coordinates, bad file)."""

    code = "E_INPUT"


class CoordinateOutOfRange(InputError):
    code = "E_COORD_RANGE"


class DuplicatePoint(InputError):
    code = "E_DUPLICATE"


class CollinearTriple(InputError):
    code = "E_COLLINEAR"

    def __init__(self, p, q, r):
        super().__init__(f"collinear triple {tuple(p)} {tuple(q)} {tuple(r)}")
        self.triple = (p, q, r)


class TooFewPoints(KHoleError):
    code = "E_TOO_FEW_POINTS"


class NotHullVertex(KHoleError):
    code = "E_NOT_HULL_VERTEX"


class InvalidHole(KHoleError):
    code = "E_INVALID_HOLE"


class RefusedScale(KHoleError):
    code = "E_REFUSED_SCALE"


class InvalidK(KHoleError):
    code = "E_INVALID_K"


class ConventionBug(KHoleError):
    code = "E_CONVENTION_BUG"


class RotationStuck(KHoleError):
    code = "E_ROTATION_STUCK"


class RotationCapExceeded(KHoleError):
    code = "E_ROTATION_CAP"


class HarvestShortfall(KHoleError):
    """Fewer k-holes than the assumed (k, s, t) fact guarantees.

    Either a bug or a counterexample to a cited theorem; ``q`` holds the
    offending point indices for inspection.
    """

    code = "E_HARVEST_SHORTFALL"

    def __init__(self, message, q=()):
        super().__init__(message)
        self.q = list(q)


class OffsetTooSmall(KHoleError):
    code = "E_HORTON_OFFSET"


class NotHortonShaped(KHoleError):
    code = "E_NOT_HORTON_SHAPED"


class GridTooTight(KHoleError):
    code = "E_GRID_TOO_TIGHT"
