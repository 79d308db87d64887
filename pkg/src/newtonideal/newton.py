"""Newton polyhedra of monomial ideals.

The polyhedron conv(I) is kept in V-representation: its extreme points plus
the implicit recession cone R^n_{>=0}. Every geometric question is answered by
an exact LP over those points, and every face carries an integer certificate
so results can be re-checked by plain evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .arith import LinearSystem, lp_feasible, primitive_integer, rank
from .ideal import MonomialIdeal, divides


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class SupportingHyperplane:
    normal: tuple
    offset: int

    def value(self, point: Sequence) -> int:
        return dot(point, self.normal)

    def touches(self, point: Sequence) -> bool:
        return self.value(point) == self.offset


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    vertices: tuple
    ideal: MonomialIdeal = field(compare=False, default=None)

    def __contains__(self, b) -> bool:
        return membership(self, b)


@dataclass(frozen=True)
class CompactFace:
    """Bounded face conv(vertices) cut out by a strictly positive normal."""

    vertices: tuple
    certificate: SupportingHyperplane
    dim: int

    def __contains__(self, point) -> bool:
        return tuple(point) in self.vertices

    def issubset(self, other: "CompactFace") -> bool:
        return set(self.vertices) <= set(other.vertices)


def in_newton_region(points: Sequence[Sequence[int]], b: Sequence) -> bool:
    """Decide b in conv(points) + R^n_{>=0}."""
    if not points:
        return False
    n = len(b)
    if any(divides(a, b) for a in points):
        return True
    # every convex combination is >= the coordinatewise minimum
    if any(b[j] < min(a[j] for a in points) for j in range(n)):
        return False
    r = len(points)
    rows = [([1] * r, "=", 1)]
    for j in range(n):
        rows.append(([a[j] for a in points], "<=", b[j]))
    return lp_feasible(LinearSystem(r, rows), nonneg=range(r)) is not None


def membership(poly: NewtonPolyhedron, b: Sequence) -> bool:
    if len(b) != poly.n:
        raise ValueError(f"dimension mismatch: {len(b)} != {poly.n}")
    return in_newton_region(poly.vertices, [Fraction(v) for v in b])


def extreme_points(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Exponents of G(I) that are not in the Newton region of the others."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    gens = ideal.gens
    ext = tuple(a for i, a in enumerate(gens)
                if not in_newton_region(gens[:i] + gens[i + 1:], a))
    return NewtonPolyhedron(ideal.n, ext, ideal)


def is_supporting(poly: NewtonPolyhedron, hyperplane: SupportingHyperplane) -> bool:
    u = hyperplane.normal
    if len(u) != poly.n:
        raise ValueError(f"dimension mismatch: {len(u)} != {poly.n}")
    if any(c < 0 for c in u) or not any(u):
        raise ValueError("normal must be nonzero and componentwise >= 0")
    values = [dot(a, u) for a in poly.vertices]
    return min(values) == hyperplane.offset


def _certificate_system(vertices, subset, gap):
    # unknowns u_0..u_{n-1}, c; u >= 1, <a,u> = c on subset, <b,u> >= c + gap off it
    n = len(vertices[0])
    rows = []
    for j in range(n):
        rows.append(([int(k == j) for k in range(n)] + [0], ">=", 1))
    chosen = set(subset)
    for i, a in enumerate(vertices):
        coeffs = list(a) + [-1]
        if i in chosen:
            rows.append((coeffs, "=", 0))
        else:
            rows.append((coeffs, ">=", gap))
    return LinearSystem(n + 1, rows)


def _lies_on_compact_face(vertices, subset) -> bool:
    return lp_feasible(_certificate_system(vertices, subset, 0), range(len(vertices[0]))) is not None


def _face_certificate(vertices, subset):
    w = lp_feasible(_certificate_system(vertices, subset, 1), range(len(vertices[0])))
    if w is None:
        return None
    ints = primitive_integer(w)
    return SupportingHyperplane(ints[:-1], ints[-1])


def affine_dim(points: Sequence[Sequence[int]]) -> int:
    a0 = points[0]
    return rank([[p - q for p, q in zip(a, a0)] for a in points[1:]])


@lru_cache(maxsize=512)
def _compact_faces(vertices: tuple) -> tuple:
    r = len(vertices)
    found = []

    def extend(subset, start):
        for i in range(start, r):
            cand = subset + (i,)
            if len(cand) > 1 and not _lies_on_compact_face(vertices, cand):
                continue
            cert = _face_certificate(vertices, cand)
            if cert is not None:
                pts = tuple(vertices[k] for k in cand)
                found.append(CompactFace(pts, cert, affine_dim(pts)))
            extend(cand, i + 1)

    extend((), 0)
    return tuple(sorted(found, key=face_key))


def face_key(face: CompactFace):
    return (face.dim, len(face.vertices), tuple(tuple(-c for c in v) for v in face.vertices))


def compact_faces(poly: NewtonPolyhedron) -> tuple:
    """All nonempty compact faces, each with a primitive integer normal >= 1.

    Subsets of vertices are explored depth first; a branch is cut as soon as
    the subset no longer lies on any compact face, so the work is bounded by
    the subsets of the maximal compact faces.
    """
    if not poly.vertices:
        return ()
    return _compact_faces(poly.vertices)


def maximal_compact_faces(poly: NewtonPolyhedron) -> tuple:
    faces = compact_faces(poly)
    return tuple(f for f in faces
                 if not any(g is not f and f.issubset(g) and len(g.vertices) > len(f.vertices)
                            for g in faces))


def c_invariant(poly: NewtonPolyhedron) -> int:
    return max(f.dim for f in compact_faces(poly))


def scale_face(face: CompactFace, m: int) -> CompactFace:
    if m < 1:
        raise ValueError("scaling factor must be a positive integer")
    cert = SupportingHyperplane(face.certificate.normal, m * face.certificate.offset)
    return CompactFace(tuple(tuple(m * c for c in v) for v in face.vertices), cert, face.dim)


def face_report(poly: NewtonPolyhedron) -> dict:
    index = {v: i for i, v in enumerate(poly.vertices)}
    maximal = set(maximal_compact_faces(poly))
    return {
        "vertices": [list(v) for v in poly.vertices],
        "faces": [
            {
                "verts": sorted(index[v] for v in f.vertices),
                "normal": list(f.certificate.normal),
                "offset": f.certificate.offset,
                "dim": f.dim,
                "maximal": f in maximal,
            }
            for f in compact_faces(poly)
        ],
    }
