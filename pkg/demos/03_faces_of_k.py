"""The 64 walls of the perfect cone and their two symmetry classes.

After a change of variables the twelve extreme rays of the cone K become
the forms (x_i ± x_j)^2, so each codimension-one face is a choice of three
rays to drop — a three-edge graph colored black (+) or red (−).  A group
of order 1152 sorts the 64 faces into just two orbits, and the orbit tells
the Voronoi type of the neighboring chambers.
"""

from collections import Counter

from latdel.catalog import catalog
from latdel.faces import (
    classify_face,
    classify_named_cone,
    enumerate_faces,
    face_of_cone,
    group_G,
)

faces = enumerate_faces()
print("%d faces; shapes:" % len(faces),
      dict(Counter(f.graph.shape for f in faces)))

group = group_G()
print("symmetry group order:", len(group))

orbits = Counter(classify_face(f.dropped) for f in faces)
print("orbits: black-fork class BF = %d, red-triangle class RT = %d" % (
    orbits["BF"], orbits["RT"]))

w0 = face_of_cone(catalog("dim4.W0"))
print("\nW0 drops", [
    "(x%d%sx%d)^2" % (p, "+" if s > 0 else "-", q) for p, q, s in w0
], "-> class", classify_face(w0))

for name in ("dim4.V2", "dim4.V3", "dim4.V4"):
    print(name, "is Voronoi type", classify_named_cone(name))
