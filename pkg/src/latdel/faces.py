"""The 64 codimension-one faces of the perfect cone K and their orbits.

After the change of variables (x1, x2, x3, x4) -> (x1+x2, x1-x2, x1-x3,
x1-x4) the twelve generators of K become the twelve forms (x_i +- x_j)^2,
so faces are bookkept by which three of them are absent.  Each absent
generator (p, q, sign) is an edge of a colored graph on {1,2,3,4}: black
for a missing (x_p + x_q)^2, red for a missing (x_p - x_q)^2.  The faces
fall into two orbits, black forks and red triangles, under a group of
order 1152 generated by sign flips, coordinate swaps and the extra
involution x_i -> -x_i + (1/2) sum x_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Dict, Optional, Tuple

from .catalog import NamedCone, catalog
from .exact import QuadraticForm, congruence_act, identity_matrix, mat_mul, nullspace

BLACK = "black"
RED = "red"

FORK = "fork"
TRIANGLE = "triangle"

TYPE_II = "II"
TYPE_III = "III"

# substitution x -> (x1+x2, x1-x2, x1-x3, x1-x4), acting by B -> M^T B M
VORONOI_MATRIX = (
    (1, 1, 0, 0),
    (1, -1, 0, 0),
    (1, 0, -1, 0),
    (1, 0, 0, -1),
)

SignedPair = Tuple[int, int, int]  # (p, q, sign) with p < q, sign in {+1, -1}

SIGNED_PAIRS: Tuple[SignedPair, ...] = tuple(
    (p, q, s) for p, q in combinations(range(1, 5), 2) for s in (1, -1)
)


def pm_form(p: int, q: int, sign: int) -> QuadraticForm:
    """(x_p + sign * x_q)^2 as a rank-4 matrix."""
    coeffs = [0] * 4
    coeffs[p - 1] = 1
    coeffs[q - 1] = sign
    return QuadraticForm(
        tuple(tuple(Fraction(coeffs[i] * coeffs[j]) for j in range(4)) for i in range(4))
    )


PM_FORMS: Dict[SignedPair, QuadraticForm] = {k: pm_form(*k) for k in SIGNED_PAIRS}


def _primitive_form(form: QuadraticForm) -> QuadraticForm:
    flat = [v for row in form.entries for v in row]
    denom = 1
    for v in flat:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in flat]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        raise ValueError("zero form has no primitive representative")
    return QuadraticForm(
        tuple(tuple(Fraction(int(v * denom) // g) for v in row) for row in form.entries)
    )


_PM_LOOKUP = {_primitive_form(f).entries: k for k, f in PM_FORMS.items()}


def identify_pm(form: QuadraticForm) -> Optional[SignedPair]:
    """The signed pair whose form is a positive multiple of the input."""
    try:
        prim = _primitive_form(form)
    except ValueError:
        return None
    return _PM_LOOKUP.get(prim.entries)


def voronoi_transform(form: QuadraticForm) -> QuadraticForm:
    if form.rank != 4:
        raise ValueError("the Voronoi transformation acts on rank-4 forms")
    return congruence_act(VORONOI_MATRIX, form)


@dataclass(frozen=True)
class ColoredGraph:
    """Three colored edges on the vertices {1,2,3,4}."""

    edges: Tuple[Tuple[int, int, str], ...]  # (p, q, color), sorted

    @property
    def shape(self) -> str:
        degrees: Dict[int, int] = {}
        for p, q, _ in self.edges:
            degrees[p] = degrees.get(p, 0) + 1
            degrees[q] = degrees.get(q, 0) + 1
        if len(degrees) == 3:
            return TRIANGLE
        if max(degrees.values()) == 3:
            return FORK
        return "path"

    @property
    def colors(self) -> Tuple[str, ...]:
        return tuple(c for _, _, c in self.edges)


def graph_of(dropped) -> ColoredGraph:
    edges = tuple(
        sorted((p, q, BLACK if s > 0 else RED) for p, q, s in dropped)
    )
    return ColoredGraph(edges)


@dataclass(frozen=True)
class KFace:
    """A codim-1 face of K, encoded by its three absent generators."""

    dropped: Tuple[SignedPair, ...]
    kept: Tuple[SignedPair, ...]
    graph: ColoredGraph
    functional: Tuple[Fraction, ...]  # supporting functional on flattened forms


def _flatten(form: QuadraticForm):
    return tuple(form.entries[i][j] for i in range(4) for j in range(i, 4))


def facial_certificate(dropped):
    """A supporting functional vanishing on the kept generators.

    Returns the functional (flattened, off-diagonals counted once) that is
    zero on the nine kept generators and strictly positive on the three
    dropped ones, or None when the drop set is not a face.
    """
    dropped = tuple(sorted(dropped))
    if len(dropped) != 3 or len({(p, q) for p, q, _ in dropped}) != 3:
        raise ValueError("need three signed pairs over distinct index pairs")
    kept = [k for k in SIGNED_PAIRS if k not in dropped]
    rows = [_flatten(PM_FORMS[k]) for k in kept]
    kernel = nullspace(rows)
    if len(kernel) != 1:
        return None
    functional = kernel[0]
    values = [sum(f * v for f, v in zip(functional, _flatten(PM_FORMS[k]))) for k in dropped]
    if all(v > 0 for v in values):
        return functional
    if all(v < 0 for v in values):
        return tuple(-f for f in functional)
    return None


def enumerate_faces():
    """All 64 certified codimension-one faces of K, canonically ordered."""
    faces = []
    for pairs in combinations(combinations(range(1, 5), 2), 3):
        for signs in product((1, -1), repeat=3):
            dropped = tuple(sorted((p, q, s) for (p, q), s in zip(pairs, signs)))
            functional = facial_certificate(dropped)
            if functional is None:
                continue
            kept = tuple(k for k in SIGNED_PAIRS if k not in dropped)
            faces.append(KFace(dropped, kept, graph_of(dropped), functional))
    return sorted(faces, key=lambda f: f.dropped)


def _frac_matrix(rows):
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def group_generators():
    gens = []
    for i in range(4):
        rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
        rows[i][i] = -1
        gens.append(_frac_matrix(rows))
    for i, j in combinations(range(4), 2):
        rows = [[1 if r == c else 0 for c in range(4)] for r in range(4)]
        rows[i][i] = rows[j][j] = 0
        rows[i][j] = rows[j][i] = 1
        gens.append(_frac_matrix(rows))
    sigma = tuple(
        tuple(Fraction(1, 2) - (1 if r == c else 0) for c in range(4)) for r in range(4)
    )
    gens.append(sigma)
    return gens


def group_G(limit: int = 10000):
    """Closure of the generators; must have order 1152."""
    gens = group_generators()
    identity = identity_matrix(4)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = mat_mul(m, g)
                if prod not in elements:
                    elements.add(prod)
                    nxt.append(prod)
                    if len(elements) > limit:
                        raise RuntimeError("group closure exceeded the bound")
        frontier = nxt
    return elements


def pair_permutation(element) -> Dict[SignedPair, SignedPair]:
    """How a group element permutes the twelve (x_i +- x_j)^2 rays."""
    perm = {}
    for key, form in PM_FORMS.items():
        image = identify_pm(congruence_act(element, form))
        if image is None:
            raise RuntimeError("group element does not preserve the ray set")
        perm[key] = image
    return perm


def apply_to_face(perm, dropped):
    return tuple(sorted(perm[k] for k in dropped))


def orbit_classify(faces, group):
    """Split the faces into the two G-orbits BF (48) and RT (16)."""
    perms = [pair_permutation(g) for g in group]
    remaining = {f.dropped: f for f in faces}
    orbits = []
    while remaining:
        seed = next(iter(remaining))
        orbit = set()
        stack = [seed]
        while stack:
            d = stack.pop()
            if d in orbit:
                continue
            orbit.add(d)
            for perm in perms:
                image = apply_to_face(perm, d)
                if image not in orbit:
                    stack.append(image)
        orbits.append(orbit)
        for d in orbit:
            remaining.pop(d)
    if len(orbits) != 2:
        raise RuntimeError("expected exactly two orbits, found %d" % len(orbits))
    orbits.sort(key=len)
    rt, bf = orbits
    return {"BF": bf, "RT": rt}


_CLASSIFICATION = None


def _classification():
    global _CLASSIFICATION
    if _CLASSIFICATION is None:
        faces = enumerate_faces()
        orbits = orbit_classify(faces, group_G())
        _CLASSIFICATION = (faces, orbits)
    return _CLASSIFICATION


def classify_face(dropped) -> str:
    _, orbits = _classification()
    dropped = tuple(sorted(dropped))
    if dropped in orbits["BF"]:
        return "BF"
    if dropped in orbits["RT"]:
        return "RT"
    raise ValueError("%r is not one of the 64 faces" % (dropped,))


def classify_type(dropped) -> str:
    """Voronoi's type of the cone spanned by the face together with omega."""
    return TYPE_II if classify_face(dropped) == "BF" else TYPE_III


def face_of_cone(cone: NamedCone):
    """The K-face obtained from a 9-dimensional catalog cone.

    The cone's generators are carried through the Voronoi transformation;
    they must land on nine distinct (x_i +- x_j)^2 rays, and the face is
    encoded by the three missing ones.
    """
    kept = set()
    for form in cone.generators:
        key = identify_pm(voronoi_transform(form))
        if key is None:
            raise ValueError(
                "a generator of %s is not carried onto a K ray" % cone.name
            )
        kept.add(key)
    if len(kept) != 9:
        raise ValueError("%s does not span a codim-1 face of K" % cone.name)
    dropped = tuple(sorted(k for k in SIGNED_PAIRS if k not in kept))
    if facial_certificate(dropped) is None:
        raise ValueError("%s is not a face of K" % cone.name)
    return dropped


def classify_named_cone(name: str) -> str:
    """Type II/III of the rank-4 Voronoi cones V2, V3, V4 via their faces."""
    face_part = {
        "dim4.V2": "dim4.V1capV2",
        "dim4.V3": "dim4.W0",
        "dim4.V4": "dim4.W0",
    }
    if name not in face_part:
        raise KeyError("no type classification for %r" % name)
    return classify_type(face_of_cone(catalog(face_part[name])))
