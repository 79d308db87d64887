"""The ten acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion
is printed in the terminal summary.
"""

import random
import time
from itertools import combinations

import pytest

from conftest import record
from corpus import corpus, extremal_corpus, random_squarefree
from oracles import lower_hull_2d

from newtonideal.closure import (
    NORMAL,
    NOT_NORMAL,
    check_closure_identity,
    is_integrally_closed,
    normality_certificate,
)
from newtonideal.fiber import (
    analytic_spread,
    compositions,
    fiber_report,
    is_persistent_generator,
    monomial_prime_intersection,
    product_is_minimal_generator,
)
from newtonideal.ideal import MonomialIdeal, multiply, parse, powers
from newtonideal.newton import compact_faces, extreme_points, scale_face
from newtonideal.reduction import bracket_power, is_extremal, minimal_monomial_reduction, radical_bound_check

pytestmark = pytest.mark.acceptance

J1 = parse("x^6, x^2*y, x*y^2, y^6")
J2 = parse("x^8, x^6*y, x^2*y^7, y^12")

BRACKET_CORPUS = corpus(seed=11, count=100, max_n=3, max_exp=8)
CLOSURE_CORPUS = corpus(seed=13, count=100, max_n=3, max_exp=6)
SPREAD_CORPUS = extremal_corpus(seed=15, count=50, max_n=3, max_exp=6, max_gens=5)
PERSIST_CORPUS = extremal_corpus(seed=17, count=30, max_n=3, max_exp=5, max_gens=5)


def squarefree_corpus():
    rng = random.Random(19)
    return [random_squarefree(rng, rng.randint(1, 5)) for _ in range(200)]


def fiber_var(indices, r):
    v = [0] * r
    for j in indices:
        v[j] += 1
    return tuple(v)


def test_criterion_01_j1_fiber():
    start = time.perf_counter()
    rep = fiber_report(J1, K=6)
    elapsed = time.perf_counter() - start
    inter = monomial_prime_intersection(rep.primes, 4)
    checks = [
        len(rep.max_compact_faces) == 3,
        # y3,y4 / y1,y4 / y1,y2 in 1-based fiber names
        [p.monomial_part for p in rep.primes] == [(2, 3), (0, 3), (0, 1)],
        all(p.binomial_part == () for p in rep.primes),
        inter == MonomialIdeal(4, [fiber_var([0, 3], 4), fiber_var([1, 3], 4), fiber_var([0, 2], 4)]),
        rep.reduced_verdict.reduced and rep.reduced_verdict.degree == 6,
        rep.is_domain is False,
        elapsed < 5,
    ]
    record(1, all(checks), f"checks={checks} time={elapsed:.2f}s")
    assert all(checks)


def brute_hilbert_degree_two(J):
    """mu(J^2) and the reduced count at degree 2, both without the library."""
    gens = J.gens
    sums = {tuple(a + b for a, b in zip(p, q)) for i, p in enumerate(gens) for q in gens[i:]}
    minimal = {s for s in sums
               if not any(t != s and all(a <= b for a, b in zip(t, s)) for t in sums)}
    hull, edges = lower_hull_2d(gens)
    face_sums = set()
    for face in [[v] for v in hull] + [list(e) for e in edges]:
        for p in face:
            for q in face:
                face_sums.add(tuple(a + b for a, b in zip(p, q)))
    return len(minimal), len(face_sums)


def test_criterion_02_j2_not_reduced():
    actual2, reduced2 = brute_hilbert_degree_two(J2)
    start = time.perf_counter()
    rep = fiber_report(J2, K=6)
    elapsed = time.perf_counter() - start
    # the lists start at degree 1, so degree k sits at index k - 1
    checks = [
        (actual2, reduced2) == (9, 7),
        not rep.reduced_verdict.reduced and rep.reduced_verdict.degree == 2,
        rep.hilbert_actual[1] == actual2,
        rep.hilbert_reduced[1] == reduced2,
        elapsed < 5,
    ]
    record(2, all(checks), f"brute force={actual2} vs {reduced2} checks={checks} time={elapsed:.2f}s")
    assert all(checks)


def test_criterion_03_squarefree_extremal():
    ideals = squarefree_corpus()
    bad = [I for I in ideals if not is_extremal(I)]
    record(3, not bad, f"{len(ideals) - len(bad)}/{len(ideals)} extremal")
    assert not bad


def test_criterion_04_bracket_powers():
    start = time.perf_counter()
    bad = []
    for I in BRACKET_CORPUS:
        J = minimal_monomial_reduction(I)
        for m, pw in enumerate(powers(I, 4)[1:], start=1):
            if minimal_monomial_reduction(pw) != bracket_power(J, m):
                bad.append((I, m))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(4, ok, f"{len(bad)} failures over {len(BRACKET_CORPUS)} ideals, m<=4, time={elapsed:.1f}s")
    assert ok, bad[:3]


def test_criterion_05_face_scaling():
    bad = []
    for I in BRACKET_CORPUS:
        faces = compact_faces(extreme_points(I))
        for m, pw in enumerate(powers(I, 3)[1:], start=1):
            scaled = {frozenset(scale_face(f, m).vertices) for f in faces}
            actual = {frozenset(f.vertices) for f in compact_faces(extreme_points(pw))}
            if scaled != actual:
                bad.append((I, m))
    record(5, not bad, f"{len(bad)} failures over {len(BRACKET_CORPUS)} ideals, m<=3")
    assert not bad, bad[:3]


def polynomial_degree(values):
    """Degree of the polynomial interpolating consecutive integer samples."""
    diffs, d = list(values), -1
    while any(diffs):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        d += 1
    return d


def test_criterion_06_spread_matches_growth():
    bad = []
    for J in SPREAD_CORPUS:
        mus = [len(P.gens) for P in powers(J, 10)[6:11]]
        if polynomial_degree(mus) != analytic_spread(J) - 1:
            bad.append((J, mus))
    record(6, not bad, f"{len(SPREAD_CORPUS) - len(bad)}/{len(SPREAD_CORPUS)} exact degree matches")
    assert not bad, bad[:3]


def test_criterion_07_closure_identity():
    bad = []
    for I in CLOSURE_CORPUS:
        ell = analytic_spread(I)
        bad += [(I, m) for m in range(ell, ell + 3) if not check_closure_identity(I, m)]
    record(7, not bad, f"{len(bad)} failures over {len(CLOSURE_CORPUS)} ideals, m in [l, l+2]")
    assert not bad, bad[:3]


def test_criterion_08_normality():
    normal = normality_certificate(parse("x^2, x*y, y^2"))
    not_normal = normality_certificate(parse("x^2, y^2"))
    checks = [normal.verdict == NORMAL,
              not_normal.verdict == NOT_NORMAL and not_normal.witness == 1]
    bad, certified = [], 0
    for I in CLOSURE_CORPUS:
        cert = normality_certificate(I)
        if cert.verdict != NORMAL:
            continue
        certified += 1
        bad += [(I, a) for a, P in enumerate(powers(I, cert.spread_ell + 3)) if a and not is_integrally_closed(P)]
    ok = all(checks) and not bad
    record(8, ok, f"examples={checks}, {certified} corpus ideals certified Normal, {len(bad)} violations")
    assert ok, bad[:3]


def power_of(pw, J, m):
    """J^m, extending the cached list of powers ``pw`` as needed."""
    while len(pw) <= m:
        pw.append(multiply(pw[-1], J))
    return pw[m]


def test_criterion_09_persistence():
    # A support on a common compact face must give minimal generators for every
    # tuple with all l_j >= 1 and sum(l) <= 5, checked exhaustively. A support on
    # no common face must give some non-minimal product; the criterion only
    # predicts this for large exponents, so the search continues past the window
    # with uniform tuples (L, ..., L).
    bad, checked, late = [], 0, []
    for J in PERSIST_CORPUS:
        pw = powers(J, 5)
        r = len(J.gens)
        for size in range(1, min(r, 5) + 1):
            for support in combinations(range(r), size):
                on_face = is_persistent_generator(J, support)
                verdicts = [product_is_minimal_generator(J, support, tuple(c + 1 for c in comp), pw[total])
                            for total in range(size, 6) for comp in compositions(total - size, size)]
                checked += 1
                if on_face and not all(verdicts):
                    bad.append((J, support, "face support gave a non-minimal product"))
                elif not on_face and all(verdicts):
                    L0 = next((L for L in range(2, 13)
                               if not product_is_minimal_generator(J, support, (L,) * size,
                                                                   power_of(pw, J, L * size))), None)
                    if L0 is None:
                        bad.append((J, support, "no non-minimal product found"))
                    else:
                        late.append(L0)
    detail = (f"{checked} supports on {len(PERSIST_CORPUS)} ideals, {len(bad)} disagreements; "
              f"{len(late)} off-face supports first fail beyond sum(l)<=5 (uniform L0 in {sorted(set(late))})")
    record(9, not bad, detail)
    assert not bad, bad[:3]


def test_criterion_10_radical_bound():
    everything = (BRACKET_CORPUS + CLOSURE_CORPUS + SPREAD_CORPUS + PERSIST_CORPUS
                  + squarefree_corpus())
    bad = [I for I in everything if not radical_bound_check(I)[2]]
    record(10, not bad, f"{len(everything) - len(bad)}/{len(everything)} satisfy mu(Rad I) <= |ext(I)|")
    assert not bad
