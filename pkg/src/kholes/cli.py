"""Command-line interface: gen / census / kedges / certify / check / bounds / validate.

Exit status: 0 success, 1 domain error or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .certify import (
    PRESETS,
    Caps,
    TheoremParams,
    check_certificate,
    dumps,
    extract_certificate,
    known_bounds,
    loads,
)
from .errors import KHoleError
from .generators import Family, GeneratorSpec, generate
from .geometry import convex_hull, format_points, parse_points
from .holes import census
from .kedges import all_kedges


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _params(args) -> TheoremParams:
    explicit = [args.k, args.s, args.t]
    if args.preset:
        if any(v is not None for v in explicit):
            raise UsageError("give either --preset or all of --k/--s/--t, not both")
        return PRESETS[args.preset]
    if any(v is None for v in explicit):
        raise UsageError("give --preset or all three of --k, --s, --t")
    return TheoremParams(args.k, args.s, args.t)


def cmd_gen(args) -> int:
    spec = GeneratorSpec(Family(args.family), args.n, args.seed, args.range)
    _emit(format_points(generate(spec)), args.out)
    return 0


def cmd_census(args) -> int:
    c = census(parse_points(_read_text(args.input)))
    _emit("".join(line + "\n" for line in c.lines()), args.out)
    return 0


def cmd_kedges(args) -> int:
    P = parse_points(_read_text(args.input))
    edges = all_kedges(P, args.s - 1)
    _emit("".join(f"{e.tail} {e.head} {e.left_count}\n" for e in edges), args.out)
    return 0


def cmd_certify(args) -> int:
    P = parse_points(_read_text(args.input))
    params = _params(args)
    cert = extract_certificate(P, params, Caps(rotation_steps=args.rotation_cap))
    _emit(dumps(cert), args.out)
    print(
        f"rounds={len(cert.rounds)} holes={cert.hole_count} bound={cert.claimed_bound}",
        file=sys.stderr,
    )
    return 0


def cmd_check(args) -> int:
    cert = loads(_read_text(args.certificate))
    P = parse_points(_read_text(args.points)) if args.points else cert.points
    report = check_certificate(P, cert)
    print(str(report))
    if report.ok:
        print(f"verified {report.holes_verified} distinct {cert.params.k}-holes", file=sys.stderr)
        return 0
    return 1


def cmd_bounds(args) -> int:
    report = known_bounds(args.k, args.n, args.hull)
    _emit("".join(line + "\n" for line in report.lines()), None)
    return 0


def cmd_validate(args) -> int:
    P = parse_points(_read_text(args.input))
    hull = len(convex_hull(P)) if len(P) >= 3 else len(P)
    print(f"OK n={len(P)} hull={hull}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kholes", description="Empty convex polygons in planar point sets.")
    parser.add_argument("--quiet", action="store_true", help="suppress the version line on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, default=10**6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("census", help="count r-holes for every r")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("kedges", help="list all (s-1)-edges")
    p.add_argument("input")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_kedges)

    p = sub.add_parser("certify", help="extract a k-hole lower-bound certificate")
    p.add_argument("input")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--rotation-cap", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check", help="audit a certificate")
    p.add_argument("certificate")
    p.add_argument("--points", help="point file to audit against (defaults to the echoed set)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="evaluate published bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hull", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("validate", help="check a point file for general position")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.quiet:
        print(f"kholes {__version__}", file=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except KHoleError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
