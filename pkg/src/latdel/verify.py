"""End-to-end verification suites: fusions, the two fusion/division tables,
the low-dimension decompositions and the simplicial-generation theorems.

The expected tables are hard-coded and the computed side is rebuilt from
scratch (stars, fusion matching, cell naming), so a run is an exact diff
against the printed source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from .catalog import catalog, sample_interior
from .delaunay import (
    DelaunayCell,
    DelaunayStar,
    canonical_orbit_rep,
    delaunay_star,
    is_basic_simplex,
    make_cell,
)
from .exact import basis_sum
from .generation import (
    cone_rays,
    is_simplicially_generating,
)
from .geometry import normalized_volume


def sv(rank: int, digits: str) -> Tuple[int, ...]:
    """The lattice vector s_I for an index string, e.g. sv(4, "134")."""
    return basis_sum(rank, [int(c) for c in digits])


def sigma_cell(order) -> DelaunayCell:
    """The simplex sigma_abcd = <0, s_a, s_ab, s_abc, s_1234>."""
    a, b, c, d = order
    return make_cell(
        [
            (0, 0, 0, 0),
            basis_sum(4, [a]),
            basis_sum(4, [a, b]),
            basis_sum(4, [a, b, c]),
            (1, 1, 1, 1),
        ]
    )


def _cell_from_names(rank: int, names) -> DelaunayCell:
    verts = []
    for n in names:
        if n == "0":
            verts.append((0,) * rank)
        else:
            verts.append(sv(rank, n))
    return make_cell(verts)


def name_vertex(v) -> str:
    if not any(v):
        return "0"
    if all(c in (0, 1) for c in v):
        return "s" + "".join(str(i + 1) for i, c in enumerate(v) if c)
    return "(" + ",".join(str(c) for c in v) + ")"


def name_cell(cell: DelaunayCell) -> str:
    for order in permutations((1, 2, 3, 4)):
        if len(cell.vertices) == 5 and cell.vertices == sigma_cell(order).vertices:
            return "σ_%d%d%d%d" % order
    return "⟨" + ",".join(name_vertex(v) for v in cell.vertices) + "⟩"


@lru_cache(maxsize=None)
def star_for(cone_name: str, weights: Optional[tuple] = None) -> DelaunayStar:
    cone = catalog(cone_name)
    if weights is None:
        form = sample_interior(cone)
    else:
        form = sample_interior(cone, [Fraction(w) for w in weights])
    return delaunay_star(form)


def ramp_weights(cone_name: str):
    """The cross-check weight vector (1, 2, 3, ...) for a catalog cone."""
    return tuple(range(1, len(catalog(cone_name).generators) + 1))


@dataclass(frozen=True)
class FusionReport:
    coarse_cone: str
    fine_cone: str
    fusions: Tuple[Tuple[DelaunayCell, Tuple[DelaunayCell, ...]], ...]
    unchanged: Tuple[DelaunayCell, ...]

    @property
    def volume_conserved(self) -> bool:
        for coarse, pieces in self.fusions:
            total = sum(normalized_volume(list(p.vertices)) for p in pieces)
            if total != normalized_volume(list(coarse.vertices)):
                return False
        return True


def cells_tiling(star: DelaunayStar, coarse: DelaunayCell):
    """The Delaunay cells of the star's decomposition inside a coarse cell.

    Candidates are lattice translates of the star's orbit representatives;
    a translate qualifies when all its vertices are vertices of the coarse
    cell.  The result must tile the coarse cell exactly (checked by the
    lattice-normalized volume).
    """
    coarse_set = set(coarse.vertices)
    found = {}
    for rep in star.orbit_reps:
        for w in coarse.vertices:
            for r in rep.vertices:
                t = tuple(a - b for a, b in zip(w, r))
                cand = rep.translate(t)
                if set(cand.vertices) <= coarse_set:
                    found[cand.vertices] = cand
    pieces = sorted(found.values(), key=lambda c: c.vertices)
    total = sum(normalized_volume(list(p.vertices)) for p in pieces)
    if total != normalized_volume(list(coarse.vertices)):
        raise ValueError("refinement does not tile the coarse cell")
    return pieces


def _is_face_of(coarse_name: str, fine_name: str) -> bool:
    coarse = catalog(coarse_name)
    fine = catalog(fine_name)
    gens = set(f.entries for f in fine.generators)
    return (
        all(g.entries in gens for g in coarse.generators)
        and coarse.dimension < fine.dimension
    )


def fusion_check(
    coarse_name: str, fine_name: str, weights=None
) -> FusionReport:
    """Match the fine star's cells into the coarse star's cells.

    `coarse` must be a catalog face of `fine` (generator subset of smaller
    dimension).  Each coarse star cell is tiled by fine Delaunay cells; a
    fine star cell landing in no coarse cell would contradict the fusion
    lemma and raises.
    """
    if not _is_face_of(coarse_name, fine_name):
        raise ValueError(
            "%s is not a catalog face of %s" % (coarse_name, fine_name)
        )
    coarse_star = star_for(coarse_name, weights)
    fine_star = star_for(fine_name, weights)
    fusions = []
    unchanged = []
    covered = {}
    for rep in coarse_star.orbit_reps:
        pieces = cells_tiling(fine_star, rep)
        if len(pieces) == 1 and pieces[0].vertices == rep.vertices:
            unchanged.append(rep)
        else:
            fusions.append((rep, tuple(pieces)))
        for p in pieces:
            covered.setdefault(canonical_orbit_rep(p).vertices, set()).add(
                rep.vertices
            )
    for cell in fine_star.cells:
        canon = canonical_orbit_rep(cell).vertices
        if canon not in covered:
            raise ValueError(
                "fine cell %r is in no coarse cell (fusion lemma violated)"
                % (cell.vertices,)
            )
    return FusionReport(
        coarse_name, fine_name, tuple(fusions), tuple(unchanged)
    )


# ---------------------------------------------------------------------------
# hard-coded fusion/division tables
#
# Each row: (no, fine cell, coarse block id, coarse-refining cell).
# Rows sharing a block id have a common coarse cell, the union of their fine
# cells.  Cells are written by their s_I vertex names.

_T1_ROWS = [
    (1, ("0", "1", "12", "123", "1234"), "A", ("0", "1", "2", "123", "1234")),
    (2, ("0", "2", "12", "123", "1234"), "A", ("1", "2", "12", "123", "1234")),
    (3, ("0", "1", "12", "124", "1234"), "B", ("0", "1", "2", "124", "1234")),
    (4, ("0", "2", "12", "124", "1234"), "B", ("1", "2", "12", "124", "1234")),
    (5, ("0", "3", "13", "123", "1234"), "C", ("0", "3", "13", "23", "1234")),
    (6, ("0", "3", "23", "123", "1234"), "C", ("0", "13", "23", "123", "1234")),
    (7, ("0", "4", "14", "124", "1234"), "D", ("0", "4", "14", "24", "1234")),
    (8, ("0", "4", "24", "124", "1234"), "D", ("0", "14", "24", "124", "1234")),
    (9, ("0", "3", "34", "134", "1234"), "E", ("0", "3", "34", "134", "234")),
    (10, ("0", "3", "34", "234", "1234"), "E", ("0", "3", "134", "234", "1234")),
    (11, ("0", "4", "34", "134", "1234"), "F", ("0", "4", "34", "134", "234")),
    (12, ("0", "4", "34", "234", "1234"), "F", ("0", "4", "134", "234", "1234")),
]
# rows 13..24: the twelve sigma_abcd unchanged in all three columns
_T1_UNCHANGED = [
    (13, (1, 3, 2, 4)),
    (14, (1, 4, 2, 3)),
    (15, (2, 3, 1, 4)),
    (16, (2, 4, 1, 3)),
    (17, (1, 3, 4, 2)),
    (18, (1, 4, 3, 2)),
    (19, (2, 3, 4, 1)),
    (20, (2, 4, 3, 1)),
    (21, (3, 1, 4, 2)),
    (22, (4, 1, 3, 2)),
    (23, (3, 2, 4, 1)),
    (24, (4, 2, 3, 1)),
]
# sigma orders of rows 1..12 of Table 1 (fine V1 cells)
_T1_SIGMA = {
    1: (1, 2, 3, 4),
    2: (2, 1, 3, 4),
    3: (1, 2, 4, 3),
    4: (2, 1, 4, 3),
    5: (3, 1, 2, 4),
    6: (3, 2, 1, 4),
    7: (4, 1, 2, 3),
    8: (4, 2, 1, 3),
    9: (3, 4, 1, 2),
    10: (3, 4, 2, 1),
    11: (4, 3, 1, 2),
    12: (4, 3, 2, 1),
}

_T2_ROWS = [
    (2, ("1", "2", "12", "123", "1234"), "A", ("1", "2", "12", "123", "124")),
    (4, ("1", "2", "12", "124", "1234"), "A", ("1", "2", "123", "124", "1234")),
    (9, ("0", "3", "34", "134", "234"), "B", ("0", "3", "4", "134", "234")),
    (11, ("0", "4", "34", "134", "234"), "B", ("3", "4", "34", "134", "234")),
    (17, ("0", "1", "13", "134", "1234"), "C", ("0", "1", "13", "14", "1234")),
    (18, ("0", "1", "14", "134", "1234"), "C", ("0", "13", "14", "134", "1234")),
    (19, ("0", "2", "23", "234", "1234"), "D", ("0", "2", "23", "24", "1234")),
    (20, ("0", "2", "24", "234", "1234"), "D", ("0", "23", "24", "234", "1234")),
]
# V2 cells unchanged in Table 2 (same cell in all three columns)
_T2_UNCHANGED = [
    (1, ("0", "1", "2", "123", "1234")),
    (3, ("0", "1", "2", "124", "1234")),
    (5, ("0", "3", "13", "23", "1234")),
    (6, ("0", "13", "23", "123", "1234")),
    (7, ("0", "4", "14", "24", "1234")),
    (8, ("0", "14", "24", "124", "1234")),
    (10, ("0", "3", "134", "234", "1234")),
    (12, ("0", "4", "134", "234", "1234")),
    (13, ("0", "1", "13", "123", "1234")),
    (14, ("0", "1", "14", "124", "1234")),
    (15, ("0", "2", "23", "123", "1234")),
    (16, ("0", "2", "24", "124", "1234")),
    (21, ("0", "3", "13", "134", "1234")),
    (22, ("0", "4", "14", "134", "1234")),
    (23, ("0", "3", "23", "234", "1234")),
    (24, ("0", "4", "24", "234", "1234")),
]


@dataclass(frozen=True)
class TableDiff:
    which: int
    expected: Tuple[str, ...]
    computed: Tuple[str, ...]
    mismatches: Tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _table_layout(which: int):
    if which == 1:
        fine, coarse, refined = "dim4.V1", "dim4.V1capV2", "dim4.V2"
        rows = []
        for no, fine_names, block, refined_names in _T1_ROWS:
            rows.append(
                (
                    no,
                    sigma_cell(_T1_SIGMA[no]),
                    block,
                    _cell_from_names(4, refined_names),
                )
            )
        for no, order in _T1_UNCHANGED:
            rows.append((no, sigma_cell(order), None, sigma_cell(order)))
        return fine, coarse, refined, rows
    if which == 2:
        fine, coarse, refined = "dim4.V2", "dim4.V2capV3", "dim4.V3"
        rows = []
        for no, fine_names, block, refined_names in _T2_ROWS:
            rows.append(
                (
                    no,
                    _cell_from_names(4, fine_names),
                    block,
                    _cell_from_names(4, refined_names),
                )
            )
        for no, names in _T2_UNCHANGED:
            cell = _cell_from_names(4, names)
            rows.append((no, cell, None, cell))
        return fine, coarse, refined, rows
    raise ValueError("table must be 1 or 2")


def _containing_cell(star: DelaunayStar, cell: DelaunayCell) -> DelaunayCell:
    """The unique Delaunay cell of the star's decomposition containing cell."""
    matches = {}
    cell_set = set(cell.vertices)
    for rep in star.orbit_reps:
        for w in cell.vertices:
            for r in rep.vertices:
                t = tuple(a - b for a, b in zip(w, r))
                cand = rep.translate(t)
                if cell_set <= set(cand.vertices):
                    matches[cand.vertices] = cand
    if len(matches) != 1:
        raise ValueError(
            "cell %r lies in %d maximal cells" % (cell.vertices, len(matches))
        )
    return next(iter(matches.values()))


def reproduce_table(which: int, weights=None) -> TableDiff:
    """Recompute a fusion/division table from scratch and diff it."""
    fine_name, coarse_name, refined_name, rows = _table_layout(which)
    fine_star = star_for(fine_name, weights)
    coarse_star = star_for(coarse_name, weights)
    refined_star = star_for(refined_name, weights)
    fine_cells = {canonical_orbit_rep(c).vertices for c in fine_star.cells}
    expected_lines = []
    computed_lines = []
    mismatches = []
    blocks: Dict[str, set] = {}
    block_coarse: Dict[str, DelaunayCell] = {}
    for no, fine_cell, block, refined_cell in sorted(rows):
        expected_lines.append(
            "%2d  %s | %s" % (no, name_cell(fine_cell), name_cell(refined_cell))
        )
        if canonical_orbit_rep(fine_cell).vertices not in fine_cells:
            mismatches.append(
                "row %d: %s is not a cell of %s"
                % (no, name_cell(fine_cell), fine_name)
            )
            continue
        try:
            coarse_cell = _containing_cell(coarse_star, fine_cell)
        except ValueError as exc:
            mismatches.append("row %d: %s" % (no, exc))
            continue
        if block is None:
            if coarse_cell.vertices != fine_cell.vertices:
                mismatches.append(
                    "row %d: %s fuses in %s but the table keeps it"
                    % (no, name_cell(fine_cell), coarse_name)
                )
                continue
        else:
            expected_union = set()
            for other_no, other_fine, other_block, _ in rows:
                if other_block == block:
                    expected_union |= set(other_fine.vertices)
            if set(coarse_cell.vertices) != expected_union:
                mismatches.append(
                    "row %d: fused cell is %s, expected the block union"
                    % (no, name_cell(coarse_cell))
                )
                continue
            blocks.setdefault(block, set())
            block_coarse[block] = coarse_cell
        pieces = cells_tiling(refined_star, coarse_cell)
        piece_sets = {p.vertices for p in pieces}
        if refined_cell.vertices not in piece_sets:
            mismatches.append(
                "row %d: %s is not among the %s cells refining %s"
                % (
                    no,
                    name_cell(refined_cell),
                    refined_name,
                    name_cell(coarse_cell),
                )
            )
            continue
        if block is not None:
            blocks[block].add(refined_cell.vertices)
        computed_lines.append(
            "%2d  %s | %s" % (no, name_cell(fine_cell), name_cell(refined_cell))
        )
    # each fused block must be refined by exactly its listed cells
    for block, expected_pieces in blocks.items():
        pieces = cells_tiling(refined_star, block_coarse[block])
        if {p.vertices for p in pieces} != expected_pieces:
            mismatches.append(
                "block %s: refinement differs from the listed cells" % block
            )
    return TableDiff(
        which, tuple(expected_lines), tuple(computed_lines), tuple(mismatches)
    )


def _canon_set(cells):
    return {canonical_orbit_rep(c).vertices for c in cells}


def verify_lowdim() -> dict:
    """Rank 1, 2 and 3 sanity: the decompositions and fusions of the text."""
    details = []
    ok = True

    def check(label, condition):
        nonlocal ok
        details.append("%s %s" % ("PASS" if condition else "FAIL", label))
        ok = ok and condition

    star1 = star_for("dim1.V1")
    check(
        "dim1: Del(0) = {[-1,0], [0,1]}",
        {c.vertices for c in star1.cells} == {((-1,), (0,)), ((0,), (1,))}
        and len(star1.orbit_reps) == 1,
    )

    s1, s2, s12 = (1, 0), (0, 1), (1, 1)
    zero = (0, 0)
    sig1 = make_cell([zero, s1, s12])
    sig2 = make_cell([zero, s2, s12])
    sig3 = make_cell([zero, s1, s2])
    sig4 = make_cell([s1, s2, s12])
    sig5 = make_cell([zero, s1, s2, s12])
    check(
        "dim2: Del_V1 reps {σ1, σ2}",
        _canon_set(star_for("dim2.V1").orbit_reps) == _canon_set([sig1, sig2]),
    )
    check(
        "dim2: Del_V2 reps {σ3, σ4}",
        _canon_set(star_for("dim2.V2").orbit_reps) == _canon_set([sig3, sig4]),
    )
    check(
        "dim2: Del_V1capV2 reps {σ5}",
        _canon_set(star_for("dim2.V1capV2").orbit_reps) == _canon_set([sig5]),
    )
    rep5 = star_for("dim2.V1capV2").cells
    fused = next(c for c in rep5 if c.vertices == sig5.vertices)
    check(
        "dim2: σ5 = σ1 ∪ σ2",
        {p.vertices for p in cells_tiling(star_for("dim2.V1"), fused)}
        == {sig1.vertices, sig2.vertices},
    )
    check(
        "dim2: σ5 = σ3 ∪ σ4",
        {p.vertices for p in cells_tiling(star_for("dim2.V2"), fused)}
        == {sig3.vertices, sig4.vertices},
    )
    check(
        "dim2: C(0,σ5) = C(0,σ3) and 0 ∉ σ4",
        cone_rays(sig5).rays == cone_rays(sig3).rays
        and zero not in sig4.vertices,
    )

    check(
        "dim3: Del_V reps are the 6 simplices σ_ijk",
        _canon_set(star_for("dim3.V").orbit_reps)
        == _canon_set([sigma3_cell(order) for order in permutations((1, 2, 3))]),
    )
    return {"suite": "lowdim", "pass": ok, "details": details}


def sigma3_cell(order) -> DelaunayCell:
    i, j, k = order
    return make_cell(
        [(0, 0, 0), basis_sum(3, [i]), basis_sum(3, [i, j]), (1, 1, 1)]
    )


def verify_main_theorem(weights=None) -> dict:
    """Simplicial generation of every rank-4 decomposition in the catalog."""
    details = []
    ok = True

    def check(label, condition):
        nonlocal ok
        details.append("%s %s" % ("PASS" if condition else "FAIL", label))
        ok = ok and condition

    for name in ("dim4.V1", "dim4.V2", "dim4.V3", "dim4.V4"):
        star = star_for(name, weights)
        check(
            "%s: 24 orbit reps, all basic simplices, 120 star cells" % name,
            len(star.orbit_reps) == 24
            and len(star.cells) == 120
            and all(is_basic_simplex(r) for r in star.orbit_reps),
        )
    for coarse_name, fine_name in (
        ("dim4.V1capV2", "dim4.V1"),
        ("dim4.V2capV3", "dim4.V2"),
        ("dim4.W0", "dim4.V3"),
    ):
        fine_star = star_for(fine_name, weights)
        star = star_for(coarse_name, weights)
        all_generating = True
        for rep in star.orbit_reps:
            pieces = cells_tiling(fine_star, rep)
            report = is_simplicially_generating(rep, pieces)
            if not report.totally_generating:
                all_generating = False
                break
        check(
            "%s: all star cells simplicially generating via %s (nilpotency 1)"
            % (coarse_name, fine_name),
            all_generating,
        )
    return {
        "suite": "theorem",
        "pass": ok,
        "details": details,
        "nilpotency": 1 if ok else "unknown",
    }


def verify_tables(weights=None) -> dict:
    details = []
    ok = True
    for which in (1, 2):
        diff = reproduce_table(which, weights)
        details.append(
            "%s Table %d reproduced (%d rows)"
            % ("PASS" if diff.ok else "FAIL", which, len(diff.expected))
        )
        details.extend(diff.mismatches)
        ok = ok and diff.ok
    return {"suite": "tables", "pass": ok, "details": details}


def verify_faces() -> dict:
    from . import faces as face_mod

    details = []
    ok = True

    def check(label, condition):
        nonlocal ok
        details.append("%s %s" % ("PASS" if condition else "FAIL", label))
        ok = ok and condition

    all_faces = face_mod.enumerate_faces()
    shapes = [f.graph.shape for f in all_faces]
    check(
        "64 faces: 32 triangles, 32 forks",
        len(all_faces) == 64
        and shapes.count(face_mod.TRIANGLE) == 32
        and shapes.count(face_mod.FORK) == 32,
    )
    group = face_mod.group_G()
    check("|G| = 1152", len(group) == 1152)
    orbits = face_mod.orbit_classify(all_faces, group)
    check("orbits BF=48, RT=16", len(orbits["BF"]) == 48 and len(orbits["RT"]) == 16)
    w0 = face_mod.face_of_cone(catalog("dim4.W0"))
    check(
        "W0 drop set {(x1+x3)², (x1+x4)², (x3−x4)²}, class RT",
        w0 == ((1, 3, 1), (1, 4, 1), (3, 4, -1))
        and face_mod.classify_face(w0) == "RT",
    )
    v1v2 = face_mod.face_of_cone(catalog("dim4.V1capV2"))
    check("V1∩V2 class BF", face_mod.classify_face(v1v2) == "BF")
    check(
        "V2 type II; V3, V4 type III",
        face_mod.classify_named_cone("dim4.V2") == face_mod.TYPE_II
        and face_mod.classify_named_cone("dim4.V3") == face_mod.TYPE_III
        and face_mod.classify_named_cone("dim4.V4") == face_mod.TYPE_III,
    )
    return {"suite": "faces", "pass": ok, "details": details}


def verify_dim4(weights=None) -> dict:
    details = []
    ok = True
    report = fusion_check("dim4.V1capV2", "dim4.V1", weights)
    cond = len(report.fusions) == 6 and len(report.unchanged) == 12
    details.append(
        "%s V1 → V1∩V2: 6 fusions, 12 unchanged" % ("PASS" if cond else "FAIL")
    )
    ok = ok and cond and report.volume_conserved
    report = fusion_check("dim4.V2capV3", "dim4.V2", weights)
    cond = len(report.fusions) == 4 and len(report.unchanged) == 16
    details.append(
        "%s V2 → V2∩V3: 4 fusions, 16 unchanged" % ("PASS" if cond else "FAIL")
    )
    ok = ok and cond and report.volume_conserved
    return {"suite": "dim4", "pass": ok, "details": details}


SUITES = {
    "dim2": lambda: verify_lowdim(),
    "dim3": lambda: verify_lowdim(),
    "lowdim": lambda: verify_lowdim(),
    "dim4": lambda: verify_dim4(),
    "tables": lambda: verify_tables(),
    "faces": lambda: verify_faces(),
    "theorem": lambda: verify_main_theorem(),
}


def run_suites(names) -> List[dict]:
    seen = []
    reports = []
    for name in names:
        if name == "all":
            wanted = ["lowdim", "dim4", "tables", "faces", "theorem"]
        else:
            wanted = [name]
        for w in wanted:
            if w in ("dim2", "dim3"):
                w = "lowdim"
            if w in seen:
                continue
            seen.append(w)
            reports.append(SUITES[w]())
    return reports
