"""Totally-generating and simplicially-generating decisions for cells at 0.

A cell containing the origin is totally generating when the lattice points
of its cone at 0 are exactly the nonnegative integer combinations of the
cell's lattice points.  The decision triangulates the cone into simplicial
subcones, collects the half-open parallelepiped points of each, and settles
each of those finitely many points by a bounded exact semigroup search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Tuple

from .delaunay import DelaunayCell
from .exact import dot, matrix_rank, nullspace, solve_overdetermined, vec_sub
from .exact import SingularMatrixError
from .geometry import (
    affine_dimension,
    cone_contains,
    extremal_rays,
    normalized_volume,
    polytope_facets,
    vertex_enumeration,
)

# total-degree cap for the bounded semigroup search, per ambient rank
DEGREE_BOUND_FACTOR = 4


class SemigroupBoundExceeded(RuntimeError):
    """The bounded membership search hit its degree cap; never passed silently."""


@dataclass(frozen=True)
class ConeAtZero:
    rays: Tuple[Tuple[int, ...], ...]
    lattice_points: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class GenerationReport:
    totally_generating: bool
    witness: Optional[Tuple[int, ...]] = None
    pieces: Tuple[DelaunayCell, ...] = ()


def _require_origin(cell: DelaunayCell):
    zero = tuple(0 for _ in cell.vertices[0])
    if zero not in cell.vertices:
        raise ValueError("0 is not a vertex of the cell")
    return zero


def cell_lattice_points(cell: DelaunayCell):
    """All lattice points of the convex hull of the cell's vertices."""
    verts = list(cell.vertices)
    g = len(verts[0])
    if affine_dimension(verts) < g:
        # lower-dimensional cells keep only their own vertices here
        return tuple(sorted(verts))
    facets = polytope_facets(verts)
    lo = [min(v[i] for v in verts) for i in range(g)]
    hi = [max(v[i] for v in verts) for i in range(g)]
    points = []
    for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if all(dot(normal, p) <= offset for _, normal, offset in facets):
            points.append(p)
    return tuple(sorted(points))


def cone_rays(cell: DelaunayCell) -> ConeAtZero:
    """Primitive extremal rays of C(0, cell), with the generating set.

    By the cell invariant the lattice points of the hull are exactly the
    listed vertices, so those are the semigroup generators.
    """
    _require_origin(cell)
    nonzero = [v for v in cell.vertices if any(v)]
    rays = tuple(sorted(extremal_rays(nonzero)))
    return ConeAtZero(rays, tuple(cell.vertices))


def parallelepiped_points(rays):
    """Lattice points of the half-open parallelepiped of independent rays.

    Points x = sum lambda_i v_i with 0 <= lambda_i < 1, found by exact
    enumeration of the bounding box followed by an exact coefficient solve.
    """
    rays = [tuple(r) for r in rays]
    k = len(rays)
    if matrix_rank(rays) != k:
        raise ValueError("rays must be linearly independent")
    g = len(rays[0])
    lo = [sum(min(r[i], 0) for r in rays) for i in range(g)]
    hi = [sum(max(r[i], 0) for r in rays) for i in range(g)]
    cols = list(zip(*rays))
    out = []
    for p in product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        try:
            coeffs = solve_overdetermined(cols, p)
        except (SingularMatrixError, ValueError):
            continue
        if all(0 <= c < 1 for c in coeffs):
            out.append(p)
    return set(out)


def in_semigroup(x, generators, degree_bound: int) -> bool:
    """Bounded exact search for x in the semigroup of the generators.

    Raises SemigroupBoundExceeded when the search is cut off by the degree
    cap while branches remain; a False answer is always certified within the
    bound.
    """
    gens = sorted(set(tuple(g) for g in generators if any(g)))
    memo = {}

    def search(point, start, budget):
        if not any(point):
            return True
        if budget == 0:
            raise SemigroupBoundExceeded(
                "membership of %r undecided within degree %d" % (x, degree_bound)
            )
        key = (point, start)
        if key in memo:
            return memo[key]
        result = False
        for i in range(start, len(gens)):
            rest = vec_sub(point, gens[i])
            if cone_contains(gens[i:], rest) is None:
                continue
            if search(rest, i, budget - 1):
                result = True
                break
        memo[key] = result
        return result

    return search(tuple(x), 0, degree_bound)


def _linear_coords(rays):
    """Coordinates of the rays in an independent-subset basis of their span."""
    basis = []
    for r in rays:
        if matrix_rank(basis + [r]) > len(basis):
            basis.append(r)
    cols = list(zip(*basis))
    return [solve_overdetermined(cols, r) for r in rays]


def _triangulate_cone(rays):
    """Pulling triangulation of a pointed cone, as ray-index simplices."""
    rays = [tuple(r) for r in rays]
    d = matrix_rank(rays)
    if len(rays) == d:
        return [tuple(range(len(rays)))]
    if d == 1:
        return [(0,)]
    if d < len(rays[0]):
        rays = _linear_coords(rays)
    result = []
    for members in _cone_facets(rays, d):
        if 0 in members:
            continue
        sub = [rays[i] for i in members]
        for simplex in _triangulate_cone(sub):
            result.append((0,) + tuple(members[i] for i in simplex))
    return result


def _cone_facets(rays, d):
    """Facet ray-index sets of a pointed full-dimensional cone."""
    facets = set()
    for subset in combinations(range(len(rays)), d - 1):
        sel = [rays[i] for i in subset]
        if matrix_rank(sel) != d - 1:
            continue
        kernel = nullspace(sel)
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        values = [dot(normal, r) for r in rays]
        if all(v >= 0 for v in values) or all(v <= 0 for v in values):
            members = tuple(i for i, v in enumerate(values) if v == 0)
            if matrix_rank([rays[i] for i in members]) == d - 1:
                facets.add(members)
    return sorted(facets)


def is_totally_generating(cell: DelaunayCell) -> GenerationReport:
    """Decide C(0, cell) Z-cap X == Semi(0, cell Z-cap X), with witness."""
    _require_origin(cell)
    g = len(cell.vertices[0])
    cone = cone_rays(cell)
    gens = [p for p in cone.lattice_points if any(p)]
    bound = DEGREE_BOUND_FACTOR * g
    for simplex in _triangulate_cone(list(cone.rays)):
        sel = [cone.rays[i] for i in simplex]
        for p in sorted(parallelepiped_points(sel)):
            if not any(p):
                continue
            if not in_semigroup(p, gens, bound):
                return GenerationReport(False, witness=tuple(p))
    return GenerationReport(True)


def _interiors_overlap(cell_a: DelaunayCell, cell_b: DelaunayCell) -> bool:
    """Exact full-dimensional intersection test for two lattice polytopes."""
    g = len(cell_a.vertices[0])
    ineqs = []
    for cell in (cell_a, cell_b):
        for _, normal, offset in polytope_facets(list(cell.vertices)):
            ineqs.append((normal, offset))
    common = vertex_enumeration(ineqs)
    if not common:
        return False
    return affine_dimension(common) == g


def _is_refinement(cell: DelaunayCell, pieces) -> bool:
    facets = polytope_facets(list(cell.vertices))
    for piece in pieces:
        for v in piece.vertices:
            if any(dot(normal, v) > offset for _, normal, offset in facets):
                return False
    total = sum(normalized_volume(list(p.vertices)) for p in pieces)
    return total == normalized_volume(list(cell.vertices))


def cone_cover_check(coarse_cell: DelaunayCell, pieces) -> bool:
    """C(0, coarse) equals the union of the cones over pieces containing 0.

    Both inclusions are checked exactly: piece rays must lie in the coarse
    cone, and every lattice point of the coarse cone within a height bound
    must lie in some piece cone.
    """
    zero = _require_origin(coarse_cell)
    pieces0 = [p for p in pieces if zero in p.vertices]
    if not pieces0:
        return False
    coarse = cone_rays(coarse_cell)
    piece_cones = [cone_rays(p) for p in pieces0]
    for pc in piece_cones:
        for ray in pc.rays:
            if cone_contains(list(coarse.rays), ray) is None:
                return False
    g = len(zero)
    height = 2 * max(abs(c) for v in coarse_cell.vertices for c in v)
    piece_ineqs = [
        _cone_inequalities(list(pc.rays), g) for pc in piece_cones
    ]
    coarse_ineqs = _cone_inequalities(list(coarse.rays), g)
    for x in product(range(-height, height + 1), repeat=g):
        if not _satisfies(coarse_ineqs, x):
            continue
        if not any(_satisfies(qi, x) for qi in piece_ineqs):
            return False
    return True


def _cone_inequalities(rays, g):
    """Halfspace description of a cone: inequality rows plus span equations."""
    d = matrix_rank(rays)
    if 1 < d < g:
        # lower-dimensional cone: fall back to direct membership
        return [("carath", tuple(rays))]
    rows = []
    if d > 1:
        for members in _cone_facets(rays, d):
            sel = [rays[i] for i in members]
            normal = nullspace(sel)[0]
            if any(dot(normal, r) < 0 for r in rays):
                normal = tuple(-v for v in normal)
            rows.append(("ge", normal))
    if d == 1:
        # single ray: x must be a nonnegative multiple
        rows.append(("ray", rays[0]))
    for eq in nullspace(rays):
        rows.append(("eq", eq))
    return rows


def _satisfies(rows, x):
    for kind, v in rows:
        if kind == "ge" and dot(v, x) < 0:
            return False
        if kind == "eq" and dot(v, x) != 0:
            return False
        if kind == "ray" and cone_contains([v], x) is None:
            return False
        if kind == "carath" and cone_contains(list(v), x) is None:
            return False
    return True


def is_simplicially_generating(cell: DelaunayCell, pieces) -> GenerationReport:
    """Decide simplicial generation of a cell from a refining decomposition.

    Only the pieces containing 0 enter: they must have pairwise disjoint
    interiors, each must be totally generating, and their cones at 0 must
    cover C(0, cell).
    """
    zero = _require_origin(cell)
    pieces = list(pieces)
    if not _is_refinement(cell, pieces):
        raise ValueError("pieces are not a refinement of the cell")
    pieces0 = [p for p in pieces if zero in p.vertices]
    for a, b in combinations(pieces0, 2):
        if _interiors_overlap(a, b):
            return GenerationReport(False, pieces=tuple(pieces0))
    for piece in pieces0:
        sub = is_totally_generating(piece)
        if not sub.totally_generating:
            return GenerationReport(False, witness=sub.witness, pieces=tuple(pieces0))
    if not cone_cover_check(cell, pieces0):
        return GenerationReport(False, pieces=tuple(pieces0))
    return GenerationReport(True, pieces=tuple(pieces0))
