"""Lower-bound certificates for the number of k-holes.

Each strip round finds an (s-1)-edge b->b' with a k-hole D through b on its
closed left side, harvests t further k-holes among the s points
(P & L(bb')) + {b'}, and deletes the s-k+1 points of L(bb') farthest from
the line. Every harvested hole loses a vertex in that deletion, so holes of
different rounds are distinct and the certificate collects t+1 holes per
round while more than 2s-2 points remain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .errors import ConventionBug, HarvestShortfall, InputError, InvalidK, RotationCapExceeded
from .geometry import HalfplaneSide, PointSet, cross, left_count, points_in_halfplane
from .holes import (
    BRUTEFORCE_LIMIT,
    Hole,
    contiguous_subhole,
    enumerate_holes_bruteforce,
    find_khole,
    is_hole,
    largest_empty_convex_polygon,
)
from .kedges import Case, EdgeInfo, RotationResult, find_initial_edge, rotate_step

FORMAT_VERSION = 1


@dataclass(frozen=True)
class TheoremParams:
    """Hole size k, subset size s and guaranteed count t.

    Encodes the assumed facts that every (s-1)-point set has a k-hole and
    every s-point set has at least t of them.
    """

    k: int
    s: int
    t: int
    note: str = ""

    def __post_init__(self):
        if self.k < 3 or self.s <= self.k or self.t < 1:
            raise InputError(f"need k >= 3, s > k, t >= 1; got k={self.k}, s={self.s}, t={self.t}")

    @property
    def strip(self) -> int:
        return self.s - self.k + 1

    @property
    def threshold(self) -> int:
        return 2 * self.s - 2


PRESETS = {
    "k5": TheoremParams(
        5, 12, 3,
        "assumed: every 10-point set has a 5-hole (so every 11-point set does), "
        "every 12-point set has at least three 5-holes",
    ),
    "k6": TheoremParams(6, 464, 1, "assumed: every 463-point set has a 6-hole"),
}


def theorem2_bound(params: TheoremParams, n: int) -> Fraction:
    """max(0, (t+1) (n - (2s-2)) / (s-k+1))."""
    return max(Fraction(0), Fraction((params.t + 1) * (n - params.threshold), params.strip))


@dataclass(frozen=True)
class Caps:
    rotation_steps: Optional[int] = None  # per round; default 10 n^2


@dataclass
class StripRound:
    initial_edge: EdgeInfo
    rotation_trail: list[RotationResult]
    final_edge: EdgeInfo
    hole_D: Hole
    q_indices: list[int]
    harvested_holes: list[Hole]
    removed: list[int]
    live_before: list[int]


@dataclass
class Certificate:
    params: TheoremParams
    n: int
    points: PointSet
    rounds: list[StripRound]
    all_holes: list[Hole]
    claimed_bound: Fraction

    @property
    def hole_count(self) -> int:
        return len(self.all_holes)


def _harvest(Q: PointSet, k: int, t: int) -> list[Hole]:
    if len(Q) <= BRUTEFORCE_LIMIT:
        return enumerate_holes_bruteforce(Q, k)[:t]
    big = largest_empty_convex_polygon(Q)
    if big.k < k:
        return []
    starts = range(big.k) if big.k > k else range(1)
    return [contiguous_subhole(Q, big, k, s) for s in starts][:t]


def _strip_round(P: PointSet, live: list[int], params: TheoremParams, cap: int) -> StripRound:
    k, s, t = params.k, params.s, params.t
    sub = P.subset(live)  # local index j is original index live[j]

    e0 = find_initial_edge(sub, s)
    left = points_in_halfplane(sub, e0.tail, e0.head, HalfplaneSide.LEFT)
    d = find_khole(sub.subset(left), k)
    if d is None:
        raise HarvestShortfall(
            f"no {k}-hole among the {len(left)} points left of the initial edge",
            q=[live[i] for i in left],
        )
    D = Hole([left[v] for v in d])

    edge = e0
    trail = []
    while True:
        if len(trail) >= cap:
            raise RotationCapExceeded(f"hole D not reached after {cap} rotation steps")
        step = rotate_step(sub, edge)
        trail.append(step)
        b, b2 = step.edge.tail, step.edge.head
        pb, pb2 = sub[b], sub[b2]
        if any(v != b and cross(pb, pb2, sub[v]) <= 0 for v in D):
            raise ConventionBug(f"hole D left the closed left side of {b}->{b2}")
        if b in D:
            break
        edge = step.edge

    strip_side = points_in_halfplane(sub, b, b2, HalfplaneSide.LEFT)
    q = sorted(strip_side + [b2])
    if len(q) != s:
        raise ConventionBug(f"|Q| = {len(q)}, expected {s}")
    found = _harvest(sub.subset(q), k, t)
    if len(found) < t:
        raise HarvestShortfall(
            f"only {len(found)} {k}-holes in an {s}-point set, assumed at least {t}",
            q=[live[i] for i in q],
        )
    holes = [D] + [Hole([q[v] for v in h]) for h in found]

    far = sorted(strip_side, key=lambda p: (-abs(cross(pb, pb2, sub[p])), live[p]))
    removed = far[: params.strip]

    def orig_edge(e: EdgeInfo) -> EdgeInfo:
        return EdgeInfo(live[e.tail], live[e.head], e.left_count)

    return StripRound(
        initial_edge=orig_edge(e0),
        rotation_trail=[RotationResult(orig_edge(r.edge), r.case) for r in trail],
        final_edge=orig_edge(trail[-1].edge),
        hole_D=Hole([live[v] for v in D]),
        q_indices=[live[i] for i in q],
        harvested_holes=[Hole([live[v] for v in h]) for h in holes],
        removed=sorted(live[i] for i in removed),
        live_before=list(live),
    )


def extract_certificate(P: PointSet, params: TheoremParams, caps: Optional[Caps] = None) -> Certificate:
    """Run strip rounds while more than 2s-2 points remain."""
    caps = caps or Caps()
    n = len(P)
    cap = caps.rotation_steps if caps.rotation_steps is not None else 10 * n * n
    live = list(range(n))
    rounds = []
    while len(live) > params.threshold:
        rnd = _strip_round(P, live, params, cap)
        rounds.append(rnd)
        gone = set(rnd.removed)
        live = [i for i in live if i not in gone]
    all_holes = [h for r in rounds for h in r.harvested_holes]
    if len(set(all_holes)) != len(all_holes):
        raise ConventionBug("a hole was harvested twice")
    return Certificate(params, n, P, rounds, all_holes, theorem2_bound(params, n))


# -- independent checker ------------------------------------------------------

@dataclass
class CheckReport:
    ok: bool
    clause: Optional[str] = None
    message: str = ""
    holes_verified: int = 0

    def __str__(self) -> str:
        if self.ok:
            return "PASS"
        return f"FAIL {self.clause}: {self.message}"


def _twice_area(P: PointSet, b: int, b2: int, p: int) -> int:
    return abs(cross(P[b], P[b2], P[p]))


def _check_rounds(P: PointSet, cert: Certificate) -> Optional[str]:
    k, s, t = cert.params.k, cert.params.s, cert.params.t
    strip = s - k + 1
    live = list(range(len(P)))
    for ri, rnd in enumerate(cert.rounds):
        tag = f"round {ri}"
        if len(live) <= 2 * s - 2:
            return f"{tag}: started with {len(live)} <= {2 * s - 2} live points"
        if sorted(rnd.live_before) != live:
            return f"{tag}: recorded live set differs from the recomputed one"
        live_set = set(live)
        sub = P.subset(live)
        local = {g: j for j, g in enumerate(live)}
        a, a2 = rnd.initial_edge.tail, rnd.initial_edge.head
        b, b2 = rnd.final_edge.tail, rnd.final_edge.head
        if not {a, a2, b, b2} <= live_set or a == a2 or b == b2:
            return f"{tag}: edge endpoints are not distinct live points"
        if left_count(sub, local[a], local[a2]) != s - 1:
            return f"{tag}: initial edge is not an (s-1)-edge of the live set"
        if left_count(sub, local[b], local[b2]) != s - 1:
            return f"{tag}: final edge is not an (s-1)-edge of the live set"
        D = rnd.hole_D
        if D.k != k or not set(D) <= live_set:
            return f"{tag}: hole D is malformed"
        if any(cross(P[a], P[a2], P[v]) <= 0 for v in D):
            return f"{tag}: hole D is not left of the initial edge"
        if b not in D:
            return f"{tag}: b is not a vertex of D"
        strip_side = [live[j] for j in points_in_halfplane(sub, local[b], local[b2], HalfplaneSide.LEFT)]
        q = sorted(strip_side + [b2])
        if list(rnd.q_indices) != q:
            return f"{tag}: Q is not (live & L(bb')) + {{b'}}"
        removed = list(rnd.removed)
        if len(set(removed)) != strip or not set(removed) <= set(strip_side):
            return f"{tag}: removed set is not {strip} points of L(bb')"
        far = sorted(strip_side, key=lambda p: (-_twice_area(P, b, b2, p), p))
        if set(far[:strip]) != set(removed):
            return f"{tag}: removed set is not distance-maximal"
        allowed = set(q) | {b}
        if len(holes := rnd.harvested_holes) != t + 1:
            return f"{tag}: {len(holes)} holes harvested, expected {t + 1}"
        if D not in holes:
            return f"{tag}: D is not among the harvested holes"
        for h in holes:
            if h.k != k or not set(h) <= allowed:
                return f"{tag}: hole {list(h)} is not inside closure(L(bb'))"
            if b in h and b2 in h:
                return f"{tag}: hole {list(h)} uses both b and b'"
            if not set(h) & set(removed):
                return f"{tag}: hole {list(h)} has no removed vertex"
        gone = set(removed)
        live = [i for i in live if i not in gone]
    if len(live) > 2 * s - 2:
        return f"rounds stopped with {len(live)} > {2 * s - 2} live points"
    flat = [h for r in cert.rounds for h in r.harvested_holes]
    if flat != list(cert.all_holes):
        return "all_holes is not the concatenation of the round harvests"
    return None


def check_certificate(P: PointSet, cert: Certificate) -> CheckReport:
    """Audit ``cert`` against ``P`` using only exact predicates and is_hole.

    Clauses: (1) every listed hole is a k-hole of P, (2) holes are pairwise
    distinct, (3) per-round structure, (4) the hole count meets the bound.
    """
    if cert.points != P or cert.n != len(P):
        return CheckReport(False, "echo", "certificate point set differs from the input")
    k = cert.params.k
    n = len(P)
    for h in cert.all_holes:
        if h.k != k or len(set(h)) != k or any(not 0 <= v < n for v in h):
            return CheckReport(False, "1", f"{list(h)} is not a set of {k} valid indices")
        if not is_hole(P, h.vertices):
            return CheckReport(False, "1", f"{list(h)} is not a {k}-hole of the point set")
    if len(set(cert.all_holes)) != len(cert.all_holes):
        return CheckReport(False, "2", "duplicate hole in all_holes")
    problem = _check_rounds(P, cert)
    if problem:
        return CheckReport(False, "3", problem)
    bound = theorem2_bound(cert.params, n)
    if cert.claimed_bound != bound:
        return CheckReport(False, "4", f"claimed bound {cert.claimed_bound} != {bound}")
    if n >= cert.params.threshold and len(cert.all_holes) < bound:
        return CheckReport(False, "4", f"{len(cert.all_holes)} holes < bound {bound}")
    return CheckReport(True, holes_verified=len(cert.all_holes))


# -- serialization ------------------------------------------------------------

def certificate_to_dict(cert: Certificate) -> dict:
    p = cert.params
    return {
        "format_version": FORMAT_VERSION,
        "k": p.k,
        "s": p.s,
        "t": p.t,
        "n": cert.n,
        "points": cert.points.as_lists(),
        "rounds": [
            {
                "initial_edge": list(r.initial_edge.pair()),
                "final_edge": list(r.final_edge.pair()),
                "hole_D": list(r.hole_D),
                "q": list(r.q_indices),
                "holes": [list(h) for h in r.harvested_holes],
                "removed": list(r.removed),
                "rotation_trail": [[x.edge.tail, x.edge.head, x.case.value] for x in r.rotation_trail],
            }
            for r in cert.rounds
        ],
        "all_holes": [list(h) for h in cert.all_holes],
        "bound": {"num": cert.claimed_bound.numerator, "den": cert.claimed_bound.denominator},
    }


def dumps(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), separators=(",", ":")) + "\n"


def _ints(v, what):
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise InputError(f"{what} must be a list of integers")
    return v


def certificate_from_dict(d: dict) -> Certificate:
    try:
        if d["format_version"] != FORMAT_VERSION:
            raise InputError(f"unsupported certificate format_version {d['format_version']!r}")
        params = TheoremParams(int(d["k"]), int(d["s"]), int(d["t"]))
        points = PointSet([tuple(_ints(p, "point")) for p in d["points"]])
        live = list(range(len(points)))
        rounds = []
        for r in d["rounds"]:
            a, a2 = _ints(r["initial_edge"], "initial_edge")
            b, b2 = _ints(r["final_edge"], "final_edge")
            trail = [
                RotationResult(EdgeInfo(int(x), int(y), params.s - 1), Case(c))
                for x, y, c in r.get("rotation_trail", [])
            ]
            removed = _ints(r["removed"], "removed")
            rounds.append(
                StripRound(
                    initial_edge=EdgeInfo(a, a2, params.s - 1),
                    rotation_trail=trail,
                    final_edge=EdgeInfo(b, b2, params.s - 1),
                    hole_D=Hole(_ints(r["hole_D"], "hole_D")),
                    q_indices=_ints(r["q"], "q"),
                    harvested_holes=[Hole(_ints(h, "hole")) for h in r["holes"]],
                    removed=removed,
                    live_before=list(live),
                )
            )
            gone = set(removed)
            live = [i for i in live if i not in gone]
        bound = Fraction(int(d["bound"]["num"]), int(d["bound"]["den"]))
        return Certificate(
            params=params,
            n=int(d["n"]),
            points=points,
            rounds=rounds,
            all_holes=[Hole(_ints(h, "hole")) for h in d["all_holes"]],
            claimed_bound=bound,
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed certificate: {exc!r}") from None


def loads(text: str) -> Certificate:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(d, dict):
        raise InputError("certificate must be a JSON object")
    return certificate_from_dict(d)


def write_certificate(cert: Certificate, path) -> None:
    Path(path).write_text(dumps(cert))


def read_certificate(path) -> Certificate:
    return loads(Path(path).read_text())


# -- reference bounds ---------------------------------------------------------

@dataclass
class BoundsReport:
    k: int
    n: int
    lower: Fraction
    terms: dict[str, Fraction] = field(default_factory=dict)
    upper_coefficient: Optional[str] = None
    caveats: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"k\t{self.k}", f"n\t{self.n}", f"lower\t{self.lower}\t(~{float(self.lower):.4f})"]
        out += [f"term\t{name}\t{val}" for name, val in self.terms.items()]
        if self.upper_coefficient is not None:
            out.append(f"upper_coefficient\t{self.upper_coefficient}")
        out += [f"caveat\t{c}" for c in self.caveats]
        return out


def known_bounds(k: int, n: int, hull: Optional[int] = None) -> BoundsReport:
    """Polynomial parts of the published bounds on the minimum k-hole count
    over n-point sets; hidden O(1) and o(n^2) terms are flagged, not guessed."""
    if k < 3:
        raise InvalidK(f"k must be at least 3, got {k}")
    caveats = []
    if k >= 7:
        return BoundsReport(k, n, Fraction(0), upper_coefficient="0",
                            caveats=["exact: Horton sets have no 7-holes"])
    if k in (3, 4):
        if hull is None:
            hull = 3
            caveats.append("hull size unknown: using H = 3, the smallest possible")
        if k == 3:
            expr = Fraction(n * n) - Fraction(43, 9) * n + hull + Fraction(11, 9)
            upper = "1.6195..."
        else:
            expr = Fraction(n * n, 2) - Fraction(55, 18) * n + hull - Fraction(23, 9)
            upper = "1.9396..."
        caveats.append("upper bound is upper_coefficient * n^2 + o(n^2)")
        return BoundsReport(k, n, expr, {"H": Fraction(hull)}, upper, caveats)
    if k == 5:
        t2 = theorem2_bound(PRESETS["k5"], n)
        terms = {"2n/9": Fraction(2 * n, 9), "strip (5,12,3)": t2, "n/2 (stated, minus O(1))": Fraction(n, 2)}
        caveats += [
            "lower bound holds up to an additive O(1)",
            "the strip bound (n-22)/2 fixes that constant at 11",
            "upper bound is upper_coefficient * n^2 + o(n^2)",
        ]
        return BoundsReport(k, n, max(terms["2n/9"], t2), terms, "1.0206...", caveats)
    t2 = theorem2_bound(PRESETS["k6"], n)
    terms = {
        "n/463 - 1": Fraction(n, 463) - 1,
        "strip (6,464,1)": t2,
        "n/229 - 4 (stated, not derived here)": Fraction(n, 229) - 4,
    }
    caveats.append("upper bound is upper_coefficient * n^2 + o(n^2)")
    return BoundsReport(k, n, max(terms["n/463 - 1"], t2), terms, "0.2005...", caveats)
