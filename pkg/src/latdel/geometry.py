"""Exact polyhedral helpers: vertex enumeration, facets, triangulation.

Everything here works over the rationals.  Dimensions are tiny (g <= 4), so
the algorithms are the simple combinatorial ones: vertices of a bounded
polyhedron are found by solving all d-subsets of its defining inequalities,
facets of a polytope by enumerating supporting hyperplanes, and membership
in a pointed cone by Caratheodory over independent ray subsets.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .exact import (
    SingularMatrixError,
    determinant,
    dot,
    matrix_rank,
    nullspace,
    solve_overdetermined,
    vec_sub,
)


def _int_scaled(a, b):
    """Scale inequality a.x <= b to integer coefficients."""
    denoms = [Fraction(v).denominator for v in a] + [Fraction(b).denominator]
    m = 1
    for d in denoms:
        m = m * d // gcd(m, d)
    return tuple(int(Fraction(v) * m) for v in a), int(Fraction(b) * m)


def _int_det(rows):
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def vertex_enumeration(inequalities):
    """All vertices of the polyhedron {x : a.x <= b for (a, b) given}.

    The polyhedron must be bounded.  Returns a sorted list of rational
    coordinate tuples.  Inequalities may be rational; they are rescaled to
    integers internally so the d x d solves stay in integer arithmetic.
    """
    if not inequalities:
        return []
    d = len(inequalities[0][0])
    ineqs = [_int_scaled(a, b) for a, b in inequalities]
    seen = set()
    for subset in combinations(range(len(ineqs)), d):
        rows = [ineqs[i][0] for i in subset]
        det = _int_det(rows)
        if det == 0:
            continue
        rhs = [ineqs[i][1] for i in subset]
        # Cramer's rule, fraction-free until the final division
        nums = []
        for col in range(d):
            m = [
                tuple(rhs[r] if c == col else rows[r][c] for c in range(d))
                for r in range(d)
            ]
            nums.append(_int_det(m))
        if det < 0:
            det = -det
            nums = [-v for v in nums]
        feasible = True
        for a, b in ineqs:
            if dot(a, nums) > b * det:
                feasible = False
                break
        if feasible:
            seen.add(tuple(Fraction(v, det) for v in nums))
    return sorted(seen)


def affine_dimension(points) -> int:
    if not points:
        return -1
    diffs = [vec_sub(p, points[0]) for p in points[1:]]
    if not diffs:
        return 0
    return matrix_rank(diffs)


def _affine_coords(points):
    """Coordinates of the points in a basis of their affine hull."""
    p0 = points[0]
    diffs = [vec_sub(p, p0) for p in points[1:]]
    basis = []
    for v in diffs:
        if matrix_rank(basis + [v]) > len(basis):
            basis.append(v)
    d = len(basis)
    cols = list(zip(*basis)) if basis else []
    coords = []
    for p in points:
        if d == 0:
            coords.append(())
            continue
        coords.append(solve_overdetermined(cols, vec_sub(p, p0)))
    return d, coords


def polytope_facets(points):
    """Facets of a full-dimensional polytope given by its vertex list.

    Returns a list of (vertex_indices, normal, offset) with normal.x <= offset
    valid for every vertex and tight exactly on the facet.
    """
    d = len(points[0])
    if affine_dimension(points) != d:
        raise ValueError("polytope is not full-dimensional")
    facets = {}
    for subset in combinations(range(len(points)), d):
        pts = [points[i] for i in subset]
        diffs = [vec_sub(p, pts[0]) for p in pts[1:]]
        kernel = nullspace(diffs) if diffs else nullspace([[Fraction(0)] * d])
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        offset = dot(normal, pts[0])
        values = [dot(normal, p) - offset for p in points]
        if all(v <= 0 for v in values):
            pass
        elif all(v >= 0 for v in values):
            normal = tuple(-v for v in normal)
            offset = -offset
            values = [-v for v in values]
        else:
            continue
        members = tuple(i for i, v in enumerate(values) if v == 0)
        facets[members] = (members, normal, offset)
    return sorted(facets.values())


def triangulate_polytope(points):
    """A pulling triangulation of conv(points); points need not be full-dim.

    Returns simplices as tuples of indices into the input list, pulling from
    the first point so the decomposition is determined by the input order.
    """
    points = list(points)
    d, coords = _affine_coords(points)
    simplices = _triangulate_full(coords, d)
    return sorted(tuple(sorted(s)) for s in simplices)


def _triangulate_full(points, d):
    if d == 0:
        return [(0,)]
    if len(points) == d + 1:
        return [tuple(range(len(points)))]
    result = []
    for members, _, _ in polytope_facets(points):
        if 0 in members:
            continue
        sub = [points[i] for i in members]
        sd, sub_coords = _affine_coords(sub)
        for simplex in _triangulate_full(sub_coords, sd):
            result.append((0,) + tuple(members[i] for i in simplex))
    return result


def normalized_volume(points):
    """g! times the Euclidean volume of a full-dimensional lattice polytope."""
    points = list(points)
    d = len(points[0])
    total = 0
    for simplex in triangulate_polytope(points):
        rows = [vec_sub(points[i], points[simplex[0]]) for i in simplex[1:]]
        total += abs(determinant(rows))
    return total


def primitive(v):
    """The primitive integer vector in the direction of v."""
    g = 0
    for c in v:
        g = gcd(g, abs(int(c)))
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(int(c) // g for c in v)


def cone_contains(rays, x):
    """Exact membership of x in the cone spanned by the rays.

    By Caratheodory it suffices to search nonnegative combinations over
    linearly independent ray subsets.  Returns the coefficient witness (full
    length, zeros for unused rays) or None.
    """
    if all(v == 0 for v in x):
        return tuple(Fraction(0) for _ in rays)
    d = matrix_rank(list(rays)) if rays else 0
    for k in range(1, d + 1):
        for subset in combinations(range(len(rays)), k):
            sel = [rays[i] for i in subset]
            if matrix_rank(sel) < k:
                continue
            cols = list(zip(*sel))
            try:
                coeffs = solve_overdetermined(cols, x)
            except (SingularMatrixError, ValueError):
                continue
            if all(c >= 0 for c in coeffs):
                full = [Fraction(0)] * len(rays)
                for i, c in zip(subset, coeffs):
                    full[i] = c
                return tuple(full)
    return None


def extremal_rays(vectors):
    """The inclusion-minimal generator subset of cone(vectors), primitivized."""
    rays = [primitive(v) for v in vectors]
    rays = sorted(set(rays))
    keep = []
    for i, r in enumerate(rays):
        others = [s for j, s in enumerate(rays) if j != i]
        if cone_contains(others, r) is None:
            keep.append(r)
    return keep
