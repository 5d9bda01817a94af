"""Command-line interface.

Subcommands: del, catalog, sample, fuse, gen, tables, faces, verify.
Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage or input error.  Output is canonical JSON, so identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import formats
from .catalog import catalog, catalog_names, sample_interior
from .delaunay import (
    CertificationError,
    NotPositiveDefiniteError,
    certify_cell,
    delaunay_star,
)
from .exact import parse_rational
from .generation import is_simplicially_generating, is_totally_generating
from .verify import fusion_check, reproduce_table, run_suites


def _emit(obj):
    sys.stdout.write(formats.dumps(obj))


def _fail_usage(message: str) -> int:
    print("error: %s" % message, file=sys.stderr)
    return 2


def _cmd_del(args) -> int:
    form = formats.load_form(args.form)
    star = delaunay_star(form)
    if args.mod_translation:
        _emit([formats.encode_cell(c) for c in star.orbit_reps])
    else:
        _emit(formats.encode_star(star))
    return 0


def _cmd_catalog(args) -> int:
    entries = formats.encode_catalog()
    if args.action == "list":
        _emit([e["name"] for e in entries])
        return 0
    matches = [e for e in entries if e["name"] == args.name]
    if not matches:
        return _fail_usage("unknown catalog cone %r" % args.name)
    _emit(matches[0])
    return 0


def _cmd_sample(args) -> int:
    try:
        cone = catalog(args.cone)
    except KeyError:
        return _fail_usage("unknown catalog cone %r" % args.cone)
    weights = None
    if args.weights:
        try:
            weights = [parse_rational(w) for w in args.weights.split(",")]
        except ValueError as exc:
            return _fail_usage("bad --weights: %s" % exc)
    try:
        form = sample_interior(cone, weights)
    except ValueError as exc:
        return _fail_usage(str(exc))
    _emit(formats.encode_form(form))
    return 0


def _cmd_fuse(args) -> int:
    try:
        report = fusion_check(args.coarse, args.fine)
    except KeyError as exc:
        return _fail_usage("unknown catalog cone %s" % exc)
    except ValueError as exc:
        return _fail_usage(str(exc))
    _emit(
        {
            "coarse": report.coarse_cone,
            "fine": report.fine_cone,
            "fusions": [
                {
                    "cell": formats.encode_cell(cell),
                    "pieces": [formats.encode_cell(p) for p in pieces],
                }
                for cell, pieces in report.fusions
            ],
            "unchanged": [formats.encode_cell(c) for c in report.unchanged],
        }
    )
    return 0


def _cmd_gen(args) -> int:
    cell = formats.load_cell(args.cell)
    form = formats.load_form(args.form)
    cert = certify_cell(form, cell)
    if not cert.ok:
        print(
            "error: the cell is not a Delaunay cell of the form: %r"
            % (cert.violations,),
            file=sys.stderr,
        )
        return 1
    if args.pieces:
        pieces = formats.load_cells(args.pieces)
        report = is_simplicially_generating(cell, pieces)
    else:
        report = is_totally_generating(cell)
    _emit(formats.encode_generation_report(report))
    return 0 if report.totally_generating else 1


def _cmd_tables(args) -> int:
    diff = reproduce_table(args.which)
    _emit(
        {
            "which": diff.which,
            "pass": diff.ok,
            "expected": list(diff.expected),
            "computed": list(diff.computed),
            "mismatches": list(diff.mismatches),
        }
    )
    return 0 if diff.ok else 1


def _cmd_faces(args) -> int:
    from . import faces as face_mod

    all_faces, orbits = face_mod._classification()
    rows = []
    for f in all_faces:
        orbit = "BF" if f.dropped in orbits["BF"] else "RT"
        rows.append((f.dropped, f.graph.shape, orbit))
    report = formats.encode_face_report(rows)
    for row in report:
        row["type"] = face_mod.TYPE_II if row["orbit"] == "BF" else face_mod.TYPE_III
    _emit(
        {
            "faces": report,
            "counts": {
                "total": len(report),
                "BF": sum(1 for r in report if r["orbit"] == "BF"),
                "RT": sum(1 for r in report if r["orbit"] == "RT"),
            },
        }
    )
    return 0


def _cmd_verify(args) -> int:
    reports = run_suites([args.suite])
    _emit(reports)
    return 0 if all(r["pass"] for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latdel",
        description="Exact lattice Delaunay decompositions of quadratic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("del", help="Delaunay star of 0 for a form")
    p.add_argument("--form", required=True, metavar="F.json")
    p.add_argument("--mod-translation", action="store_true")
    p.set_defaults(func=_cmd_del)

    p = sub.add_parser("catalog", help="list or show the named cones")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("sample", help="interior form of a catalog cone")
    p.add_argument("--cone", required=True)
    p.add_argument("--weights", metavar="w1,w2,...")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("fuse", help="match a fine star into a coarse star")
    p.add_argument("--coarse", required=True)
    p.add_argument("--fine", required=True)
    p.set_defaults(func=_cmd_fuse)

    p = sub.add_parser("gen", help="totally/simplicially generating decision")
    p.add_argument("--cell", required=True, metavar="C.json")
    p.add_argument("--form", required=True, metavar="F.json")
    p.add_argument("--pieces", metavar="P.json")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("tables", help="recompute a fusion/division table")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("faces", help="the 64 faces of K with orbits and types")
    p.set_defaults(func=_cmd_faces)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=["all", "dim2", "dim3", "dim4", "tables", "faces", "theorem"],
    )
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action == "show" and not args.name:
        parser.error("catalog show requires a cone name")
    try:
        return args.func(args)
    except formats.FormatError as exc:
        return _fail_usage(str(exc))
    except FileNotFoundError as exc:
        return _fail_usage(str(exc))
    except NotPositiveDefiniteError as exc:
        return _fail_usage(str(exc))
    except CertificationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
