"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analysis import analyze
from .config import DEFAULT, Tolerances
from .document import DocumentError, PolygonDocument, write_corpus
from .errors import ExhaustionError, GeometryError
from .generator import PRNG_NAME, AngleSampling, Family, GenSpec, generate
from .polygon import validate
from .render import render_svg
from . import verify as verify_mod

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load(args, tol: Tolerances):
    try:
        doc = PolygonDocument.load(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    except DocumentError as exc:
        raise UsageError(str(exc)) from None
    try:
        return doc, doc.to_polygon(tol)
    except GeometryError as exc:
        raise UsageError(f"invalid polygon: {exc}") from None


def cmd_validate(args, tol: Tolerances) -> int:
    _, P = _load(args, tol)
    report = validate(P, tol, fast_generic=args.fast_generic)
    _emit(_dumps({"schema": 1, **report.to_dict()}), args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_analyze(args, tol: Tolerances) -> int:
    _, P = _load(args, tol)
    report = validate(P, tol, fast_generic=args.fast_generic)
    if not report.ok and not args.force:
        _emit(_dumps({"schema": 1, "error": "polygon fails validation", "validation": report.to_dict()}), args.out)
        return EXIT_FAIL
    result = analyze(P, tol, force=args.force, fast_generic=args.fast_generic)
    _emit(_dumps(result), args.out)
    if not report.convex:
        return EXIT_OK
    return EXIT_OK if result["passed"] else EXIT_FAIL


def _n_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def cmd_verify(args, tol: Tolerances) -> int:
    n_min, n_max = args.n_range
    if n_min < 4:
        raise UsageError("verify needs n >= 4: the four-vertex theorem concerns polygons with at least four vertices")
    if n_max < n_min or args.count < 1:
        raise UsageError("empty verification range")
    summary = verify_mod.run(args.count, n_min, n_max, args.seed, tol, jobs=args.jobs,
                             flip_edge=args.inject_failure)
    print(verify_mod.format_table(summary))
    if args.json:
        Path(args.json).write_text(_dumps(summary))
    if not summary["all_pass"]:
        sys.stderr.write("reproduce with:\n" + json.dumps(summary["first_failure"]["document"]) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_generate(args, tol: Tolerances) -> int:
    docs = []
    for k in range(args.count):
        seed = args.seed if args.count == 1 else verify_mod.polygon_seed(args.seed, args.n, k)
        spec = GenSpec(args.n, seed, tuple(args.radial_range) if args.radial_range else None, args.jitter,
                       Family(args.family), AngleSampling(args.angle_sampling))
        try:
            P, stats = generate(spec, tol)
        except ExhaustionError as exc:
            sys.stderr.write(f"{exc}\n")
            return EXIT_FAIL
        docs.append(PolygonDocument.from_polygon(
            P, args.model, {"spec": spec.to_dict(), "stats": stats.to_dict(), "prng": PRNG_NAME}))
    if args.out:
        write_corpus(args.out, docs)
    else:
        for d in docs:
            sys.stdout.write(d.dumps() + "\n")
    return EXIT_OK


def cmd_render(args, tol: Tolerances) -> int:
    _, P = _load(args, tol)
    Path(args.out).write_text(render_svg(P, circles=args.circles, exact_arcs=args.exact_arcs))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypfour", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--tolerances", metavar="FILE", help="JSON file overriding tolerance fields")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the admissibility conditions")
    s.add_argument("input")
    s.add_argument("--out")
    s.add_argument("--fast-generic", action="store_true", help="test only consecutive quadruples for concyclicity")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="full per-vertex analysis and theorem checks")
    s.add_argument("input")
    s.add_argument("--out")
    s.add_argument("--force", action="store_true", help="analyze invalid or non-convex input without asserting")
    s.add_argument("--fast-generic", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("verify", help="batch-verify every check on random polygons")
    s.add_argument("--count", type=int, default=100, help="polygons per vertex count")
    s.add_argument("--n-range", type=_n_range, default=(4, 12), metavar="A..B")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--json", metavar="FILE", help="write the summary as JSON")
    s.add_argument("--inject-failure", type=int, default=None, help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("generate", help="write seeded random polygons as JSON lines")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--family", choices=[f.value for f in Family], default=Family.CONVEX_RANDOM.value)
    s.add_argument("--angle-sampling", choices=[a.value for a in AngleSampling],
                   default=AngleSampling.STRATIFIED.value)
    s.add_argument("--radial-range", type=float, nargs=2, metavar=("MIN", "MAX"))
    s.add_argument("--jitter", type=float, default=1e-2)
    s.add_argument("--model", choices=["poincare", "hyperboloid"], default="poincare")
    s.add_argument("--out")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("render", help="draw polygon, evolute and markers as SVG")
    s.add_argument("input")
    s.add_argument("--out", required=True)
    s.add_argument("--circles", action="store_true", help="also draw the circumcircles")
    s.add_argument("--exact-arcs", action="store_true", help="use SVG arcs instead of polylines")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        tol = Tolerances.load(args.tolerances) if args.tolerances else DEFAULT
    except (OSError, ValueError, TypeError) as exc:
        sys.stderr.write(f"hypfour: bad tolerances file: {exc}\n")
        return EXIT_USAGE
    try:
        return args.func(args, tol)
    except UsageError as exc:
        sys.stderr.write(f"hypfour {args.command}: {exc}\n")
        return EXIT_USAGE
    except (GeometryError, ValueError) as exc:
        sys.stderr.write(f"hypfour {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
