"""Minimal monomial reductions and the invariants read off from them."""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import MonomialIdeal, multiply, num_min_gens, radical
from .newton import extreme_points, in_newton_region


class CutoffExceeded(RuntimeError):
    """A bounded search ran past its caller-supplied cutoff."""

    def __init__(self, what: str, cutoff: int):
        super().__init__(f"{what} not found within cutoff {cutoff}")
        self.cutoff = cutoff


@dataclass(frozen=True)
class ReductionReport:
    J: MonomialIdeal
    slope_p: int
    is_extremal_input: bool
    ext_count: int


def _require_nonzero(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ValueError("the zero ideal has no reduction")


def minimal_monomial_reduction(ideal: MonomialIdeal) -> MonomialIdeal:
    _require_nonzero(ideal)
    return MonomialIdeal(ideal.n, extreme_points(ideal).vertices)


def is_extremal(ideal: MonomialIdeal) -> bool:
    return minimal_monomial_reduction(ideal) == ideal


def bracket_power(J: MonomialIdeal, m: int) -> MonomialIdeal:
    """J^[m]: every generator exponent multiplied by m.

    A non-extremal argument is first replaced by its minimal reduction.
    """
    if m < 1:
        raise ValueError("bracket power needs m >= 1")
    J = minimal_monomial_reduction(J)
    return MonomialIdeal(J.n, [tuple(m * c for c in a) for a in J.gens])


def kodiyalam_slope(ideal: MonomialIdeal) -> int:
    """Largest total degree of a generator of the minimal reduction."""
    _require_nonzero(ideal)
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Kodiyalam slope")
    return max(sum(a) for a in minimal_monomial_reduction(ideal).gens)


def is_reduction(L: MonomialIdeal, ideal: MonomialIdeal) -> bool:
    """L is a reduction of I iff L is inside I and conv(L) = conv(I)."""
    if L.n != ideal.n:
        raise ValueError(f"dimension mismatch: {L.n} != {ideal.n}")
    _require_nonzero(L)
    _require_nonzero(ideal)
    if not all(b in ideal for b in L.gens):
        return False
    # conv(L) is inside conv(I) already; check the reverse via the extreme points of I
    ext_l = extreme_points(L).vertices
    return all(in_newton_region(ext_l, a) for a in extreme_points(ideal).vertices)


def reduction_number(ideal: MonomialIdeal, L: MonomialIdeal, cutoff: int = 20) -> int:
    """Least m <= cutoff with L * I^m = I^(m+1)."""
    if not is_reduction(L, ideal):
        raise ValueError("second argument is not a reduction of the first")
    current = MonomialIdeal.unit(ideal.n)
    for m in range(cutoff + 1):
        nxt = multiply(current, ideal)
        if multiply(L, current) == nxt:
            return m
        current = nxt
    raise CutoffExceeded("reduction number", cutoff)


def radical_bound_check(ideal: MonomialIdeal):
    """Return (mu(Rad I), |ext(I)|, mu(Rad I) <= |ext(I)|)."""
    mu_rad = num_min_gens(radical(ideal))
    ext_count = len(extreme_points(ideal).vertices)
    return mu_rad, ext_count, mu_rad <= ext_count


def reduction_report(ideal: MonomialIdeal) -> ReductionReport:
    J = minimal_monomial_reduction(ideal)
    return ReductionReport(J, kodiyalam_slope(ideal), J == ideal, len(J.gens))
