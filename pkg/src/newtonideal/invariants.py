"""Self-checks run by ``newtonideal verify`` on a single ideal.

Each check recomputes a structural identity two ways and reports whether
they agree. None of them can prove a statement for all degrees; the bounds
used are part of each check's name.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .closure import check_closure_identity
from .fiber import (
    analytic_spread,
    compositions,
    face_lattice_hilbert_crosscheck,
    is_persistent_generator,
    product_is_minimal_generator,
)
from .ideal import MonomialIdeal, multiply, powers
from .newton import compact_faces, extreme_points, scale_face
from .reduction import bracket_power, minimal_monomial_reduction, radical_bound_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_bracket_powers(ideal: MonomialIdeal, max_m: int = 4) -> CheckResult:
    J = minimal_monomial_reduction(ideal)
    for m, pw in enumerate(powers(ideal, max_m)[1:], start=1):
        if minimal_monomial_reduction(pw) != bracket_power(J, m):
            return CheckResult(f"bracket powers m<={max_m}", False, f"fails at m={m}")
    return CheckResult(f"bracket powers m<={max_m}", True)


def check_face_scaling(ideal: MonomialIdeal, max_m: int = 3) -> CheckResult:
    faces = compact_faces(extreme_points(ideal))
    for m, pw in enumerate(powers(ideal, max_m)[1:], start=1):
        scaled = {frozenset(scale_face(f, m).vertices) for f in faces}
        actual = {frozenset(f.vertices) for f in compact_faces(extreme_points(pw))}
        if scaled != actual:
            return CheckResult(f"face scaling m<={max_m}", False, f"fails at m={m}")
    return CheckResult(f"face scaling m<={max_m}", True)


def persistence_disagreements(J: MonomialIdeal, max_total: int = 5, max_uniform: int = 12) -> list:
    """Supports where the face criterion and direct expansion disagree.

    A support on a common compact face must give minimal generators for all
    exponent tuples with all l_j >= 1 and sum <= max_total. A support on no
    common face must produce a product that is not a minimal generator. Such
    a product may need large exponents, so when none occurs up to max_total
    the uniform tuples (L, ..., L) are tried for L <= max_uniform.
    """
    pw = powers(J, max_total)

    def power_of(m):
        while len(pw) <= m:
            pw.append(multiply(pw[-1], J))
        return pw[m]

    r = len(J.gens)
    bad = []
    for size in range(1, min(r, max_total) + 1):
        for support in combinations(range(r), size):
            face = is_persistent_generator(J, support)
            tuples = [tuple(c + 1 for c in comp)
                      for total in range(size, max_total + 1)
                      for comp in compositions(total - size, size)]
            direct = all(product_is_minimal_generator(J, support, l, pw[sum(l)])
                         for l in tuples)
            if face != direct:
                if face:
                    bad.append(support)
                    continue
                uniform = ((L,) * size for L in range(2, max_uniform + 1) if L * size > max_total)
                if all(product_is_minimal_generator(J, support, l, power_of(sum(l))) for l in uniform):
                    bad.append(support)
    return bad


def check_persistence(ideal: MonomialIdeal, max_total: int = 5) -> CheckResult:
    J = minimal_monomial_reduction(ideal)
    bad = persistence_disagreements(J, max_total)
    name = f"persistent generators sum(l)<={max_total}"
    if bad:
        return CheckResult(name, False, f"supports {bad}")
    return CheckResult(name, True)


def check_closure(ideal: MonomialIdeal) -> CheckResult:
    ell = analytic_spread(ideal)
    name = f"closure identity m={ell}..{ell + 2}"
    for m in range(ell, ell + 3):
        if not check_closure_identity(ideal, m):
            return CheckResult(name, False, f"fails at m={m}")
    return CheckResult(name, True)


def check_hilbert_lattice(ideal: MonomialIdeal, K: int) -> CheckResult:
    J = minimal_monomial_reduction(ideal)
    return CheckResult(f"face-lattice Hilbert count K={K}", face_lattice_hilbert_crosscheck(J, K))


def check_radical_bound(ideal: MonomialIdeal) -> CheckResult:
    mu, ext, ok = radical_bound_check(ideal)
    return CheckResult("radical bound", ok, f"mu(Rad I)={mu}, |ext|={ext}")


def run_all(ideal: MonomialIdeal, K: int = 6) -> list:
    return [
        check_bracket_powers(ideal),
        check_face_scaling(ideal),
        check_persistence(ideal),
        check_closure(ideal),
        check_hilbert_lattice(ideal, K),
        check_radical_bound(ideal),
    ]
