"""Exact rational linear algebra and an LP feasibility kernel.

All geometric predicates in the package reduce to deciding whether a small
system of linear equations and inequalities has a solution. The kernel is a
phase-1 simplex over :class:`fractions.Fraction` with Bland's rule, so it
terminates on degenerate input and never rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction

EQ = "="
GE = ">="
LE = "<="
_RELATIONS = {EQ, GE, LE, "==", "≥", "≤"}
_NORMALIZE = {"==": EQ, "≥": GE, "≤": LE}


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    relation: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearSystem:
    """``nvars`` unknowns and a list of constraints ``coeffs . x  rel  rhs``.

    ``<=`` is accepted for convenience and stored as a negated ``>=`` row.
    """

    nvars: int
    constraints: tuple = ()

    def __post_init__(self):
        rows = []
        for row in self.constraints:
            if isinstance(row, Constraint):
                coeffs, rel, rhs = row.coeffs, row.relation, row.rhs
            else:
                coeffs, rel, rhs = row
            if rel not in _RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            rel = _NORMALIZE.get(rel, rel)
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != self.nvars:
                raise ValueError(
                    f"constraint has {len(coeffs)} coefficients, expected {self.nvars}")
            rhs = Fraction(rhs)
            if rel == LE:
                coeffs = tuple(-c for c in coeffs)
                rhs = -rhs
                rel = GE
            rows.append(Constraint(coeffs, rel, rhs))
        object.__setattr__(self, "constraints", tuple(rows))

    def satisfied_by(self, x: Sequence) -> bool:
        if len(x) != self.nvars:
            return False
        for row in self.constraints:
            lhs = sum((c * v for c, v in zip(row.coeffs, x)), Fraction(0))
            if row.relation == EQ and lhs != row.rhs:
                return False
            if row.relation == GE and lhs < row.rhs:
                return False
        return True


def lp_feasible(system: LinearSystem, nonneg: Iterable[int] = ()) -> Optional[tuple]:
    """Return an exact feasible point of ``system`` or ``None``.

    Variables listed in ``nonneg`` are constrained to be >= 0; the rest are
    free. The witness is a basic solution of the phase-1 problem and satisfies
    every constraint exactly.
    """
    nonneg = set(nonneg)
    n = system.nvars
    if any(not 0 <= j < n for j in nonneg):
        raise ValueError("nonnegative variable index out of range")

    # column layout: one column per nonneg var, two (x+, x-) per free var,
    # then one surplus column per >= row
    col_of = []
    ncols = 0
    for j in range(n):
        if j in nonneg:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2
    rows = []
    rhs = []
    nsurplus = sum(1 for r in system.constraints if r.relation == GE)
    total = ncols + nsurplus
    s = ncols
    for r in system.constraints:
        row = [Fraction(0)] * total
        for j, c in enumerate(r.coeffs):
            if c:
                pos, neg = col_of[j]
                row[pos] = c
                if neg is not None:
                    row[neg] = -c
        if r.relation == GE:
            row[s] = Fraction(-1)
            s += 1
        b = r.rhs
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)

    point = _phase_one(rows, rhs, total)
    if point is None:
        return None
    witness = []
    for pos, neg in col_of:
        v = point[pos]
        if neg is not None:
            v -= point[neg]
        witness.append(v)
    witness = tuple(witness)
    if not system.satisfied_by(witness):
        raise ArithmeticError("simplex produced an infeasible witness")
    return witness


def _phase_one(rows, rhs, ncols):
    """Minimize the sum of artificials for ``rows x = rhs, x >= 0, rhs >= 0``.

    Returns the structural part of a feasible basic solution, or ``None``.
    """
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * ncols
    width = ncols + m
    tab = [row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(rows)]
    b = list(rhs)
    basis = [ncols + i for i in range(m)]
    # reduced costs of the phase-1 objective (sum of artificials)
    cost = [Fraction(0)] * width
    for j in range(ncols):
        cost[j] = -sum((tab[i][j] for i in range(m)), Fraction(0))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = b[i] / a
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leave])):
                    best, leave = ratio, i
        if leave is None:
            # cannot happen: phase-1 objective is bounded below by 0
            raise ArithmeticError("unbounded phase-1 problem")
        _pivot(tab, b, cost, leave, enter)
        basis[leave] = enter

    residual = sum((b[i] for i in range(m) if basis[i] >= ncols), Fraction(0))
    if residual != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, j in enumerate(basis):
        if j < ncols:
            x[j] = b[i]
    return x


def _pivot(tab, b, cost, r, c):
    prow = tab[r]
    p = prow[c]
    if p != 1:
        prow[:] = [v / p for v in prow]
        b[r] /= p
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(tab):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
            b[i] -= f * b[r]
    f = cost[c]
    if f:
        for j in nz:
            cost[j] -= f * prow[j]


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of rational vectors by exact Gaussian elimination."""
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def primitive_integer(values: Sequence[Fraction]) -> tuple:
    """Scale a rational vector by a positive factor to coprime integers."""
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)
