"""Fiber ring of an extremal monomial ideal J = (x^a_1, ..., x^a_r).

The fiber ring is T/D with T = K[y_1..y_r] and y_j mapping to x^a_j. Its
reduction is controlled by the compact faces of conv(J): the minimal primes
are indexed by the maximal compact faces, and in degree k the reduced ring
has one basis element per distinct point sum(l_j a_j), sum(l_j) = k, whose
support lies on a common compact face. Fiber variables are 0-based indices
into ``J.gens``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .ideal import MonomialIdeal, intersect, is_minimal_generator, power, powers
from .newton import (
    CompactFace,
    c_invariant,
    compact_faces,
    extreme_points,
    maximal_compact_faces,
)

DEFAULT_HILBERT_BOUND = 6
DEFAULT_BINOMIAL_BOUND = 4


@dataclass(frozen=True)
class FiberPrime:
    """The prime (P_F, B_F) of T attached to a maximal compact face F.

    ``binomial_part`` lists pairs (u, v) of exponent vectors over the fiber
    variables with y^u - y^v in the lattice kernel, up to ``degree_bound``.
    """

    face: CompactFace
    face_indices: tuple
    monomial_part: tuple
    binomial_part: tuple
    degree_bound: int


@dataclass(frozen=True)
class ReducedVerdict:
    """Degree-bounded reducedness verdict; ``degree`` is K or the first witness."""

    reduced: bool
    degree: int

    def __str__(self):
        return f"{'Reduced' if self.reduced else 'NotReduced'}({self.degree})"


@dataclass(frozen=True)
class FiberReport:
    J: MonomialIdeal
    max_compact_faces: tuple
    primes: tuple
    spread_ell: int
    is_domain: bool
    reduced_verdict: ReducedVerdict
    hilbert_actual: tuple
    hilbert_reduced: tuple


def compositions(k: int, parts: int):
    """All tuples of ``parts`` nonnegative integers summing to ``k``."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


def _require_extremal(J: MonomialIdeal):
    if J.is_zero:
        raise ValueError("the zero ideal has no fiber ring")
    if extreme_points(J).vertices != J.gens:
        raise ValueError("fiber computations need an extremal ideal; pass its minimal reduction")


def _faces(J: MonomialIdeal):
    return compact_faces(extreme_points(J))


def _face_indices(J: MonomialIdeal, face: CompactFace) -> tuple:
    index = {a: i for i, a in enumerate(J.gens)}
    return tuple(sorted(index[v] for v in face.vertices))


def analytic_spread(ideal: MonomialIdeal) -> int:
    """One more than the largest dimension of a compact face of conv(I)."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("analytic spread is defined here for nonzero proper ideals")
    return c_invariant(extreme_points(ideal)) + 1


def on_common_compact_face(J: MonomialIdeal, support: Iterable[int]) -> bool:
    pts = {J.gens[j] for j in support}
    return any(pts <= set(f.vertices) for f in _faces(J))


def is_persistent_generator(J: MonomialIdeal, support: Sequence[int],
                            exponents: Optional[Sequence[int]] = None) -> bool:
    """Face criterion for persistence of products of generators.

    Products prod f_j^{l_j} over ``support`` stay minimal generators of
    J^(sum l) for every choice of exponents exactly when the supporting
    exponents lie on a common compact face. ``exponents`` only gets
    validated; the verdict does not depend on it.
    """
    _require_extremal(J)
    support = tuple(support)
    if not support:
        raise ValueError("support must be nonempty")
    if any(not 0 <= j < len(J.gens) for j in support):
        raise ValueError("support index out of range")
    if exponents is not None:
        if len(exponents) != len(support) or any(e < 1 for e in exponents):
            raise ValueError("exponents must be positive, one per support index")
    return on_common_compact_face(J, support)


def product_exponent(J: MonomialIdeal, support: Sequence[int], exponents: Sequence[int]) -> tuple:
    n = J.n
    return tuple(sum(l * J.gens[j][i] for j, l in zip(support, exponents)) for i in range(n))


def product_is_minimal_generator(J: MonomialIdeal, support: Sequence[int],
                                 exponents: Sequence[int],
                                 J_power: Optional[MonomialIdeal] = None) -> bool:
    """Direct check: is prod f_j^{l_j} in G(J^m), m = sum l, by expansion."""
    if J_power is None:
        J_power = power(J, sum(exponents))
    return is_minimal_generator(J_power, product_exponent(J, support, exponents))


def fiber_hilbert_actual(J: MonomialIdeal, K: int) -> list:
    """[mu(J^k) for k = 1..K], the Hilbert function of the fiber ring."""
    if K < 1:
        raise ValueError("K must be >= 1")
    return [len(p.gens) for p in powers(J, K)[1:]]


def face_points(J: MonomialIdeal, indices: Sequence[int], k: int) -> set:
    """Distinct points sum(l_j a_j) with sum(l_j) = k over the given generators."""
    gens = [J.gens[j] for j in indices]
    n = J.n
    return {tuple(sum(l * a[i] for l, a in zip(comp, gens)) for i in range(n))
            for comp in compositions(k, len(gens))}


def fiber_hilbert_reduced(J: MonomialIdeal, K: int) -> list:
    """Graded dimensions of the reduced fiber ring in degrees 1..K."""
    _require_extremal(J)
    if K < 1:
        raise ValueError("K must be >= 1")
    faces = [_face_indices(J, f) for f in maximal_compact_faces(extreme_points(J))]
    out = []
    for k in range(1, K + 1):
        pts = set()
        for idx in faces:
            pts |= face_points(J, idx, k)
        out.append(len(pts))
    return out


def reducedness_verdict(J: MonomialIdeal, K: int = DEFAULT_HILBERT_BOUND) -> ReducedVerdict:
    """Compare actual and reduced Hilbert functions up to degree K.

    Equality through K only shows the two rings agree up to degree K; it is
    not a proof of reducedness.
    """
    actual = fiber_hilbert_actual(J, K)
    reduced = fiber_hilbert_reduced(J, K)
    for k, (a, r) in enumerate(zip(actual, reduced), start=1):
        if a != r:
            return ReducedVerdict(False, k)
    return ReducedVerdict(True, K)


def _binomials(J: MonomialIdeal, indices: Sequence[int], D: int) -> tuple:
    r = len(J.gens)
    found = []
    for d in range(1, D + 1):
        by_point = defaultdict(list)
        for comp in compositions(d, len(indices)):
            u = [0] * r
            for j, l in zip(indices, comp):
                u[j] = l
            by_point[product_exponent(J, indices, comp)].append(tuple(u))
        for group in by_point.values():
            for u, v in combinations(sorted(group, reverse=True), 2):
                if not any(p and q for p, q in zip(u, v)):
                    found.append((u, v))
    return tuple(found)


def minimal_primes(J: MonomialIdeal, D: int = DEFAULT_BINOMIAL_BOUND) -> tuple:
    """One prime (P_F, B_F) per maximal compact face; B_F truncated at degree D."""
    _require_extremal(J)
    r = len(J.gens)
    primes = []
    for face in maximal_compact_faces(extreme_points(J)):
        idx = _face_indices(J, face)
        outside = tuple(j for j in range(r) if j not in idx)
        primes.append(FiberPrime(face, idx, outside, _binomials(J, idx, D), D))
    return tuple(primes)


def monomial_prime_intersection(primes: Sequence[FiberPrime], r: int) -> MonomialIdeal:
    """Intersection of the monomial parts (y_j : j in P_F) as an ideal of T."""
    result = MonomialIdeal.unit(r)
    for p in primes:
        part = MonomialIdeal(r, [tuple(int(i == j) for i in range(r)) for j in p.monomial_part])
        result = intersect(result, part)
    return result


def is_fiber_domain(J: MonomialIdeal) -> bool:
    _require_extremal(J)
    return len(maximal_compact_faces(extreme_points(J))) == 1


def face_lattice_hilbert_crosscheck(J: MonomialIdeal, K: int) -> bool:
    """Recount the reduced Hilbert function through the compact-face lattice.

    The degree-k part of the inverse limit over the compact faces has one
    basis element per point lying in some k*F. Inclusion-exclusion over the
    maximal faces turns this into counts on their intersections, each of
    which must itself be a compact face; the points of k*F meet those of
    k*G exactly in the points of k*(F cap G).
    """
    _require_extremal(J)
    faces = _faces(J)
    vertex_sets = {frozenset(f.vertices) for f in faces}
    maximal = [frozenset(f.vertices) for f in maximal_compact_faces(extreme_points(J))]
    index = {a: i for i, a in enumerate(J.gens)}

    terms = []
    for size in range(1, len(maximal) + 1):
        for group in combinations(maximal, size):
            common = frozenset.intersection(*group)
            if not common:
                continue
            if common not in vertex_sets:
                return False
            terms.append(((-1) ** (size + 1), common))

    expected = fiber_hilbert_reduced(J, K)
    for k in range(1, K + 1):
        total = 0
        for sign, common in terms:
            total += sign * len(face_points(J, sorted(index[v] for v in common), k))
        if total != expected[k - 1]:
            return False
    return True


def fiber_report(ideal: MonomialIdeal, K: int = DEFAULT_HILBERT_BOUND,
                 D: int = DEFAULT_BINOMIAL_BOUND) -> FiberReport:
    """Fiber-ring report for the minimal monomial reduction of ``ideal``."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no fiber ring")
    J = MonomialIdeal(ideal.n, extreme_points(ideal).vertices)
    poly = extreme_points(J)
    actual = fiber_hilbert_actual(J, K)
    reduced = fiber_hilbert_reduced(J, K)
    verdict = next((ReducedVerdict(False, k) for k, (a, r) in
                    enumerate(zip(actual, reduced), start=1) if a != r),
                   ReducedVerdict(True, K))
    mc = maximal_compact_faces(poly)
    return FiberReport(
        J=J,
        max_compact_faces=mc,
        primes=minimal_primes(J, D),
        spread_ell=c_invariant(poly) + 1,
        is_domain=len(mc) == 1,
        reduced_verdict=verdict,
        hilbert_actual=tuple(actual),
        hilbert_reduced=tuple(reduced),
    )
