"""A walk through the rank-2 picture: stars, holes, and one fusion.

The hexagonal form B = [[2,-1],[-1,2]] tiles the plane by unimodular
triangles; the identity form sits on the boundary between the two
triangulated chambers and fuses each pair of triangles into a square.
"""

from fractions import Fraction

from latdel import delaunay_star, nearest_points
from latdel.catalog import catalog, sample_interior
from latdel.verify import cells_tiling, name_cell

hexagonal = sample_interior(catalog("dim2.V1"))
print("interior sample of the first rank-2 chamber:")
for row in hexagonal.entries:
    print("   ", [str(v) for v in row])

star = delaunay_star(hexagonal)
print("\nstar of 0 has %d triangles, %d up to translation:" % (
    len(star.cells), len(star.orbit_reps)))
for rep in star.orbit_reps:
    print("   ", name_cell(rep), "center", tuple(str(c) for c in rep.center),
          "r^2 =", rep.sq_radius)

alpha = (Fraction(2, 3), Fraction(1, 3))
print("\nlattice points nearest to the hole (2/3, 1/3):",
      sorted(nearest_points(hexagonal, alpha)))

identity = sample_interior(catalog("dim2.V1capV2"))
coarse = delaunay_star(identity)
square = coarse.orbit_reps[0]
print("\non the chamber wall the star coarsens to %d squares;" % len(coarse.cells))
pieces = cells_tiling(star, square)
print("the square", name_cell(square), "is tiled by",
      " and ".join(name_cell(p) for p in pieces))
