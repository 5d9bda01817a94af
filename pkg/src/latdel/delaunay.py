"""Delaunay cells and the star of the origin for a positive definite form.

The star Del(0) is computed through the classical duality with the Voronoi
polytope of the origin: the holes (centers of maximal Delaunay cells through
0) are exactly the vertices of {y : 2B(e, y) <= B(e, e) for all lattice e},
and the defining inequalities can be restricted to the minima of the cosets
of X/2X.  Every cell is then re-validated by an independent empty-sphere
certificate, and the star by a local completeness check, so the construction
never silently trusts the enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Optional, Tuple

from .exact import (
    QuadraticForm,
    SingularMatrixError,
    evaluate,
    is_positive_definite,
    mat_vec,
    norm,
    solve_overdetermined,
    vec_sub,
)
from .geometry import affine_dimension, polytope_facets, vertex_enumeration


class NotPositiveDefiniteError(ValueError):
    """The operation needs a positive definite form."""


class NotCospherical(ValueError):
    """Vertices do not lie on a common empty sphere."""


class CertificationError(RuntimeError):
    """A computed star failed its own certificate; signals an internal bug."""


@dataclass(frozen=True)
class DelaunayCell:
    """A Delaunay cell: sorted lattice vertices plus cached sphere data."""

    vertices: Tuple[Tuple[int, ...], ...]
    dim: int
    center: Optional[Tuple[Fraction, ...]] = None
    sq_radius: Optional[Fraction] = None

    def translate(self, t) -> "DelaunayCell":
        center = None
        if self.center is not None:
            center = tuple(c + d for c, d in zip(self.center, t))
        return DelaunayCell(
            tuple(
                sorted(tuple(v + d for v, d in zip(vert, t)) for vert in self.vertices)
            ),
            self.dim,
            center,
            self.sq_radius,
        )

    def vertex_set(self):
        return set(self.vertices)


def make_cell(vertices, center=None, sq_radius=None) -> DelaunayCell:
    verts = tuple(sorted(set(tuple(int(c) for c in v) for v in vertices)))
    return DelaunayCell(verts, affine_dimension(verts), center, sq_radius)


@dataclass(frozen=True)
class EmptySphereCertificate:
    cell: DelaunayCell
    checked_norm_bound: Fraction
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class DelaunayStar:
    form: QuadraticForm
    cells: Tuple[DelaunayCell, ...]
    orbit_reps: Tuple[DelaunayCell, ...]


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _int_interval(c: Fraction, t: Fraction):
    """Inclusive integer range of n with (n - c)^2 <= t, exactly."""
    if t < 0:
        return range(0)
    approx = isqrt(t.numerator // t.denominator) + 2
    hi = _floor(c) + approx
    while hi - c > 0 and (hi - c) * (hi - c) > t:
        hi -= 1
    lo = -(-c.numerator // c.denominator) - approx  # ceil(c) - approx
    while c - lo > 0 and (c - lo) * (c - lo) > t:
        lo += 1
    return range(lo, hi + 1)


def _ldl(form: QuadraticForm):
    """B = U^T D U with U unit upper triangular; requires B positive definite."""
    n = form.rank
    a = [list(row) for row in form.entries]
    d = []
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        pivot = a[i][i]
        if pivot <= 0:
            raise NotPositiveDefiniteError("form is not positive definite")
        d.append(pivot)
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / pivot
        for r in range(i + 1, n):
            f = a[i][r] / pivot
            for c in range(i + 1, n):
                a[r][c] -= f * a[i][c]
    return d, u


def points_within(form: QuadraticForm, alpha, bound: Fraction):
    """All lattice points x with B(x - alpha, x - alpha) <= bound.

    Fincke-Pohst style enumeration from the exact U^T D U decomposition; the
    returned list is provably exhaustive and sorted.
    """
    n = form.rank
    alpha = tuple(Fraction(a) for a in alpha)
    bound = Fraction(bound)
    if bound < 0:
        return []
    d, u = _ldl(form)
    out = []
    x = [0] * n

    def descend(i: int, budget: Fraction):
        if i < 0:
            out.append(tuple(x))
            return
        # c is where the i-th squared term vanishes given the fixed tail
        shift = sum(u[i][j] * (x[j] - alpha[j]) for j in range(i + 1, n))
        c = alpha[i] - shift
        for xi in _int_interval(c, budget / d[i]):
            x[i] = xi
            term = d[i] * (xi - c) * (xi - c)
            descend(i - 1, budget - term)

    descend(n - 1, bound)
    return sorted(out)


def nearest_points(form: QuadraticForm, alpha):
    """All lattice points attaining the minimum of ||b - alpha|| in B."""
    if not is_positive_definite(form):
        raise NotPositiveDefiniteError("nearest_points needs a definite form")
    alpha = tuple(Fraction(a) for a in alpha)
    start = tuple(_floor(a + Fraction(1, 2)) for a in alpha)
    bound = norm(form, vec_sub(start, alpha))
    candidates = points_within(form, alpha, bound)
    best = min(norm(form, vec_sub(p, alpha)) for p in candidates)
    return set(p for p in candidates if norm(form, vec_sub(p, alpha)) == best)


def voronoi_inequalities(form: QuadraticForm):
    """Inequalities 2B(e, y) <= B(e, e) cutting out the Voronoi cell of 0.

    The vectors e run over all minima of the nonzero cosets of X/2X, which
    suffice to define the cell (and include every facet vector).
    """
    n = form.rank
    ineqs = []
    for parity in product((0, 1), repeat=n):
        if not any(parity):
            continue
        half = tuple(-Fraction(p, 2) for p in parity)
        bound = Fraction(norm(form, parity), 4)
        zs = points_within(form, half, bound)
        values = {}
        for z in zs:
            e = tuple(p + 2 * c for p, c in zip(parity, z))
            values[e] = norm(form, e)
        best = min(values.values())
        for e, v in values.items():
            if v == best:
                row = tuple(2 * c for c in mat_vec(form.entries, e))
                ineqs.append((row, v, e))
    return ineqs


def cell_center(form: QuadraticForm, vertices):
    """Center and squared radius of the sphere through the given vertices.

    Vertices must contain 0 and affinely span the full rank; inconsistent
    (non-cospherical) systems raise NotCospherical.
    """
    verts = [tuple(v) for v in vertices]
    rows = []
    rhs = []
    for v in verts:
        if all(c == 0 for c in v):
            continue
        rows.append(tuple(2 * c for c in mat_vec(form.entries, v)))
        rhs.append(norm(form, v))
    try:
        center = solve_overdetermined(rows, rhs)
    except SingularMatrixError:
        raise SingularMatrixError("vertices are not full-dimensional")
    except ValueError:
        raise NotCospherical("vertices are not cospherical")
    return center, norm(form, center)


def certify_cell(form: QuadraticForm, cell: DelaunayCell) -> EmptySphereCertificate:
    """Exhaustive empty-sphere check for a cell with 0 as a vertex.

    Any violator e of B(e,e) - 2B(e,c) >= 0 satisfies B(e-c,e-c) < r^2 and
    hence B(e,e) < 4 r^2, so sweeping the ball of squared radius 4 r^2 is
    sound.  Equality must hold exactly at the vertices.
    """
    center, sq_radius = cell.center, cell.sq_radius
    violations = []
    if center is None or sq_radius is None:
        try:
            center, sq_radius = cell_center(form, cell.vertices)
        except (SingularMatrixError, NotCospherical):
            # report the vertices that break the sphere through a spanning subset
            return EmptySphereCertificate(cell, Fraction(0), tuple(cell.vertices))
    bound = 4 * sq_radius
    vertex_set = cell.vertex_set()
    for e in points_within(form, (0,) * form.rank, bound):
        slack = norm(form, e) - 2 * evaluate(form, e, center)
        if slack < 0 or (slack == 0) != (e in vertex_set):
            violations.append(e)
    for v in cell.vertices:
        if norm(form, v) - 2 * evaluate(form, v, center) != 0:
            if v not in violations:
                violations.append(v)
    return EmptySphereCertificate(cell, bound, tuple(sorted(violations)))


def canonical_orbit_rep(cell: DelaunayCell) -> DelaunayCell:
    """The translate of the cell carrying its smallest vertex to the origin."""
    v = min(cell.vertices)
    return cell.translate(tuple(-c for c in v))


def is_basic_simplex(cell: DelaunayCell) -> bool:
    """True iff the cell is a simplex whose edge vectors form a Z-basis."""
    verts = cell.vertices
    g = len(verts[0]) if verts else 0
    if len(verts) != g + 1:
        return False
    from .exact import determinant

    rows = [vec_sub(v, verts[0]) for v in verts[1:]]
    return abs(determinant(rows)) == 1


def cell_facets_through_origin(cell: DelaunayCell):
    """Vertex sets of the (g-1)-faces of the cell that contain 0."""
    facets = polytope_facets(list(cell.vertices))
    zero = tuple(0 for _ in cell.vertices[0])
    out = []
    for members, _, _ in facets:
        pts = tuple(cell.vertices[i] for i in members)
        if zero in pts:
            out.append(frozenset(pts))
    return out


def check_star_completeness(cells) -> bool:
    """Every (g-1)-face through 0 must be shared by exactly two star cells."""
    counts = {}
    for cell in cells:
        for face in cell_facets_through_origin(cell):
            counts[face] = counts.get(face, 0) + 1
    return all(c == 2 for c in counts.values())


def delaunay_star(form: QuadraticForm) -> DelaunayStar:
    """All maximal Delaunay cells containing the origin, certified."""
    if not is_positive_definite(form):
        raise NotPositiveDefiniteError("delaunay_star needs a definite form")
    if form.rank > 4:
        raise ValueError("only ranks up to 4 are supported")
    ineqs = [(row, rhs) for row, rhs, _ in voronoi_inequalities(form)]
    centers = vertex_enumeration(ineqs)
    cells = []
    for c in centers:
        sq = norm(form, c)
        verts = [
            e
            for e in points_within(form, c, sq)
            if norm(form, vec_sub(e, c)) == sq
        ]
        cells.append(make_cell(verts, tuple(c), sq))
    cells.sort(key=lambda cell: cell.vertices)
    reps = sorted(
        {canonical_orbit_rep(cell).vertices: canonical_orbit_rep(cell) for cell in cells}.values(),
        key=lambda cell: cell.vertices,
    )
    for rep in reps:
        cert = certify_cell(form, rep)
        if not cert.ok:
            raise CertificationError(
                "cell %r failed its empty-sphere certificate" % (rep.vertices,)
            )
        if rep.dim != form.rank:
            raise CertificationError("star cell is not full-dimensional")
    if not check_star_completeness(cells):
        raise CertificationError("star of the origin is not locally complete")
    return DelaunayStar(form, tuple(cells), tuple(reps))
