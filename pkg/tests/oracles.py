"""Brute-force checks that share no code path with the package internals."""

from itertools import combinations

import sympy

from newtonideal.ideal import contains_monomial, power


def _rows(system, nonneg):
    rows = [(list(c.coeffs), c.relation, c.rhs) for c in system.constraints]
    for j in nonneg:
        rows.append(([int(k == j) for k in range(system.nvars)], ">=", 0))
    return rows


def _satisfies(rows, x):
    for coeffs, rel, rhs in rows:
        lhs = sum(sympy.Rational(c) * v for c, v in zip(coeffs, x))
        if rel == "=" and lhs != rhs:
            return False
        if rel == ">=" and lhs < rhs:
            return False
    return True


def vertex_enumeration_feasible(system, nonneg=()):
    """Feasibility by solving every rank-sized subsystem of tight constraints.

    A nonempty polyhedron has a minimal face equal to the solution set of
    rank(A) linearly independent tight rows, so some such subsystem's solution
    is feasible.
    """
    rows = _rows(system, nonneg)
    n = system.nvars
    if not rows:
        return True
    A = sympy.Matrix([[sympy.Rational(c) for c in r[0]] for r in rows])
    r = A.rank()
    if r == 0:
        return _satisfies(rows, [0] * n)
    for subset in combinations(range(len(rows)), r):
        sub = A.extract(list(subset), list(range(n)))
        if sub.rank() < r:
            continue
        rhs = sympy.Matrix([sympy.Rational(rows[i][2]) for i in subset])
        sol, params = sub.gauss_jordan_solve(rhs)
        x = list(sol.subs({p: 0 for p in params}))
        if _satisfies(rows, x):
            return True
    return False


def integrally_dependent(ideal, b, max_k=12):
    """Smallest k <= max_k with x^(k b) in I^k, or None."""
    pw = ideal
    for k in range(1, max_k + 1):
        if k > 1:
            pw = power(ideal, k)
        if contains_monomial(pw, tuple(k * c for c in b)):
            return k
    return None


def lower_hull_2d(points):
    """Vertices and edges of the compact part of conv(points) + R^2_{>=0}.

    Andrew's monotone chain restricted to the staircase: walk from the point
    with least y (then least x) to the point with least x (then least y),
    keeping only left turns.
    """
    pts = sorted(set(points), key=lambda p: (-p[0], p[1]))
    start = min(pts, key=lambda p: (p[1], p[0]))
    end = min(pts, key=lambda p: (p[0], p[1]))
    chain = [p for p in pts if end[0] <= p[0] <= start[0]]
    hull = []
    for p in chain:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    # drop points that are not strictly decreasing staircase corners
    hull = [p for i, p in enumerate(hull)
            if all(not (q[0] <= p[0] and q[1] <= p[1]) for q in hull if q != p)]
    edges = list(zip(hull, hull[1:]))
    return hull, edges
