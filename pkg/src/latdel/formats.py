"""JSON encodings for forms, cells, stars, reports and the cone catalog.

All rationals travel as "p/q" strings ("p" when the denominator is 1),
all collections are canonically sorted, and emit-then-parse is the
identity, so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Optional

from .catalog import NamedCone, catalog, catalog_names
from .delaunay import DelaunayCell, DelaunayStar, make_cell
from .exact import QuadraticForm, format_rational, parse_rational
from .generation import GenerationReport


class FormatError(ValueError):
    """Malformed payload; the message carries a location diagnostic."""


def _expect(condition, where, what):
    if not condition:
        raise FormatError("%s: %s" % (where, what))


def encode_form(form: QuadraticForm) -> dict:
    return {
        "rank": form.rank,
        "entries": [[format_rational(v) for v in row] for row in form.entries],
    }


def decode_form(obj, where: str = "form") -> QuadraticForm:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect("entries" in obj, where, 'missing "entries"')
    rows = obj["entries"]
    _expect(
        isinstance(rows, list) and rows and all(isinstance(r, list) for r in rows),
        where + ".entries",
        "expected a non-empty list of rows",
    )
    g = len(rows)
    entries = []
    for i, row in enumerate(rows):
        _expect(len(row) == g, "%s.entries[%d]" % (where, i), "row length != %d" % g)
        parsed = []
        for j, v in enumerate(row):
            try:
                parsed.append(parse_rational(v))
            except (ValueError, TypeError) as exc:
                raise FormatError("%s.entries[%d][%d]: %s" % (where, i, j, exc))
        entries.append(tuple(parsed))
    if "rank" in obj:
        _expect(obj["rank"] == g, where + ".rank", "rank does not match the matrix")
    try:
        return QuadraticForm(tuple(entries))
    except ValueError as exc:
        raise FormatError("%s: %s" % (where, exc))


def encode_cell(cell: DelaunayCell) -> dict:
    out = {"vertices": [list(v) for v in cell.vertices]}
    if cell.center is not None:
        out["center"] = [format_rational(c) for c in cell.center]
        out["sq_radius"] = format_rational(cell.sq_radius)
    return out


def decode_cell(obj, where: str = "cell") -> DelaunayCell:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect("vertices" in obj, where, 'missing "vertices"')
    verts = obj["vertices"]
    _expect(isinstance(verts, list) and verts, where + ".vertices", "expected a non-empty list")
    parsed = []
    for i, v in enumerate(verts):
        _expect(
            isinstance(v, list) and all(isinstance(c, int) for c in v),
            "%s.vertices[%d]" % (where, i),
            "expected a list of integers",
        )
        parsed.append(tuple(v))
    center = None
    sq_radius = None
    if obj.get("center") is not None:
        try:
            center = tuple(parse_rational(c) for c in obj["center"])
            sq_radius = parse_rational(obj["sq_radius"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("%s.center: %s" % (where, exc))
    try:
        return make_cell(parsed, center=center, sq_radius=sq_radius)
    except ValueError as exc:
        raise FormatError("%s: %s" % (where, exc))


def encode_star(star: DelaunayStar) -> dict:
    return {
        "form": encode_form(star.form),
        "cells": [encode_cell(c) for c in star.cells],
        "orbit_reps": [encode_cell(c) for c in star.orbit_reps],
    }


def decode_star(obj, where: str = "star") -> DelaunayStar:
    _expect(isinstance(obj, dict), where, "expected an object")
    for key in ("form", "cells", "orbit_reps"):
        _expect(key in obj, where, 'missing "%s"' % key)
    form = decode_form(obj["form"], where + ".form")
    cells = tuple(
        decode_cell(c, "%s.cells[%d]" % (where, i)) for i, c in enumerate(obj["cells"])
    )
    reps = tuple(
        decode_cell(c, "%s.orbit_reps[%d]" % (where, i))
        for i, c in enumerate(obj["orbit_reps"])
    )
    return DelaunayStar(form, cells, reps)


def encode_generation_report(report: GenerationReport) -> dict:
    return {
        "totally_generating": report.totally_generating,
        "witness": list(report.witness) if report.witness is not None else None,
        "pieces": [encode_cell(p) for p in report.pieces],
    }


def decode_generation_report(obj, where: str = "report") -> GenerationReport:
    _expect(isinstance(obj, dict), where, "expected an object")
    _expect("totally_generating" in obj, where, 'missing "totally_generating"')
    witness = obj.get("witness")
    if witness is not None:
        _expect(
            isinstance(witness, list) and all(isinstance(c, int) for c in witness),
            where + ".witness",
            "expected a list of integers or null",
        )
        witness = tuple(witness)
    pieces = tuple(
        decode_cell(p, "%s.pieces[%d]" % (where, i))
        for i, p in enumerate(obj.get("pieces", []))
    )
    return GenerationReport(bool(obj["totally_generating"]), witness, pieces)


def encode_face_report(faces_with_orbits) -> list:
    """Face report rows: [{dropped: [[p,q,"+"|"-"]], shape, orbit}]."""
    rows = []
    for dropped, shape, orbit in faces_with_orbits:
        rows.append(
            {
                "dropped": [[p, q, "+" if s > 0 else "-"] for p, q, s in dropped],
                "shape": shape,
                "orbit": orbit,
            }
        )
    return rows


def encode_catalog() -> list:
    out = []
    for name in catalog_names():
        cone = catalog(name)
        out.append(
            {
                "name": cone.name,
                "rank": cone.ambient_rank,
                "generator_names": list(cone.generator_names),
                "generators": [
                    [[format_rational(v) for v in row] for row in g.entries]
                    for g in cone.generators
                ],
            }
        )
    return out


def decode_catalog(obj, where: str = "catalog"):
    _expect(isinstance(obj, list), where, "expected a list")
    cones = []
    for i, entry in enumerate(obj):
        here = "%s[%d]" % (where, i)
        _expect(isinstance(entry, dict), here, "expected an object")
        for key in ("name", "rank", "generator_names", "generators"):
            _expect(key in entry, here, 'missing "%s"' % key)
        gens = tuple(
            decode_form({"entries": m}, "%s.generators[%d]" % (here, j))
            for j, m in enumerate(entry["generators"])
        )
        cones.append(
            NamedCone(
                entry["name"],
                entry["rank"],
                tuple(entry["generator_names"]),
                gens,
            )
        )
    return cones


def catalog_data_text() -> str:
    """The shipped catalog data file; must equal dumps(encode_catalog())."""
    from importlib.resources import files

    return files("latdel").joinpath("data/catalog.json").read_text(encoding="utf-8")


def dumps(obj) -> str:
    """Canonical serialization: 2-space indent, sorted keys, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str, where: str = "input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("%s: line %d column %d: %s" % (where, exc.lineno, exc.colno, exc.msg))


def load_form(path: str) -> QuadraticForm:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_form(loads(fh.read(), path), path)


def load_cell(path: str) -> DelaunayCell:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_cell(loads(fh.read(), path), path)


def load_cells(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        obj = loads(fh.read(), path)
    if isinstance(obj, dict):
        return [decode_cell(obj, path)]
    _expect(isinstance(obj, list), path, "expected a cell or a list of cells")
    return [decode_cell(c, "%s[%d]" % (path, i)) for i, c in enumerate(obj)]
