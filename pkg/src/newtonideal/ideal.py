"""Monomial ideals stored as their minimal generating exponent vectors."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Optional, Sequence

ALIASES = ("x", "y", "z")


class ParseError(ValueError):
    """Syntax error in the ideal text grammar; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff x^a divides x^b."""
    return all(p <= q for p, q in zip(a, b))


def _minimal(vectors: Iterable[tuple]) -> tuple:
    pool = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept = []
    for v in pool:
        if not any(divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of K[x_1..x_n] generated by monomials.

    ``gens`` is always the minimal generating set, sorted in descending
    lexicographic order (x^6 before x^2*y before y^6). The zero ideal has no
    generators; the unit ideal has the single generator (0, ..., 0).
    """

    n: int
    gens: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient dimension must be nonnegative")
        vecs = []
        for g in self.gens:
            g = tuple(int(c) for c in g)
            if len(g) != self.n:
                raise ValueError(
                    f"exponent vector {g} has length {len(g)}, expected {self.n}")
            if any(c < 0 for c in g):
                raise ValueError(f"negative exponent in {g}")
            vecs.append(g)
        object.__setattr__(self, "gens", _minimal(vecs))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, [])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, b) -> bool:
        return contains_monomial(self, b)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, m: int) -> "MonomialIdeal":
        return power(self, m)

    def __str__(self):
        return format_ideal(self)


def minimalize(gens: Iterable[Sequence[int]], n: Optional[int] = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise ValueError("cannot infer the ambient dimension of an empty generator set")
        n = len(gens[0])
    lengths = {len(g) for g in gens}
    if lengths - {n}:
        raise ValueError(f"mixed dimensions {sorted(lengths)} in generator set")
    return MonomialIdeal(n, gens)


def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    sums = {tuple(p + q for p, q in zip(u, v)) for u in a.gens for v in b.gens}
    return MonomialIdeal(a.n, sums)


def power(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 0:
        raise ValueError("power must be nonnegative")
    result = MonomialIdeal.unit(ideal.n)
    for _ in range(m):
        result = multiply(result, ideal)
    return result


def powers(ideal: MonomialIdeal, upto: int) -> list:
    """``[I^0, I^1, ..., I^upto]`` computed incrementally."""
    out = [MonomialIdeal.unit(ideal.n)]
    for _ in range(upto):
        out.append(multiply(out[-1], ideal))
    return out


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, [tuple(int(c > 0) for c in g) for g in ideal.gens])


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection of monomial ideals: generated by pairwise lcms."""
    _check_same_dim(a, b)
    return MonomialIdeal(a.n, {tuple(map(max, u, v)) for u in a.gens for v in b.gens})


def contains_monomial(ideal: MonomialIdeal, b: Sequence[int]) -> bool:
    if len(b) != ideal.n:
        raise ValueError(f"dimension mismatch: {len(b)} != {ideal.n}")
    return any(divides(g, b) for g in ideal.gens)


def is_minimal_generator(ideal: MonomialIdeal, b: Sequence[int]) -> bool:
    return tuple(b) in ideal.gens


def num_min_gens(ideal: MonomialIdeal) -> int:
    return len(ideal.gens)


def monomials_in_box(ideal: MonomialIdeal, bound: Sequence[int]) -> set:
    """All exponent vectors of the ideal inside the box [0, bound]."""
    return {b for b in _cartesian(*(range(t + 1) for t in bound))
            if contains_monomial(ideal, b)}


# --- text and JSON forms -------------------------------------------------

def default_names(n: int) -> list:
    if n <= len(ALIASES):
        return list(ALIASES[:n])
    return [f"x{i}" for i in range(1, n + 1)]


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[,*^])|(?P<bad>\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        kind = m.lastgroup if m else None
        if kind is None:
            break
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _var_index(name: str, names: Optional[Sequence[str]]):
    if names is not None:
        return names.index(name) if name in names else None
    if name in ALIASES:
        return ALIASES.index(name)
    m = re.fullmatch(r"x([1-9]\d*)", name)
    if m:
        return int(m.group(1)) - 1
    return None


def parse(text: str, n: Optional[int] = None,
          names: Optional[Sequence[str]] = None) -> MonomialIdeal:
    """Parse ``"x^6, x^2*y, x*y^2, y^6"`` style input.

    Variables are ``x1..xn`` with ``x, y, z`` accepted as aliases of the first
    three, unless explicit ``names`` are given. ``1`` is the unit ideal and
    ``0`` the zero ideal. Without ``n`` or ``names`` the dimension is the
    largest variable index used.
    """
    if names is not None:
        names = list(names)
        if n is not None and n != len(names):
            raise ValueError(f"{len(names)} variable names given for n = {n}")
        n = len(names)
    tokens = _tokenize(text)
    i = 0
    monomials = []  # list of (dict index -> exp, position)

    def peek():
        return tokens[i]

    while True:
        kind, val, pos = peek()
        if kind == "num":
            if val not in ("0", "1"):
                raise ParseError(f"coefficient {val} not allowed", pos)
            i += 1
            # 0 contributes nothing to the generating set
            if val == "1":
                monomials.append(({}, pos))
        elif kind == "name":
            exps = {}
            while True:
                kind, val, pos = peek()
                if kind != "name":
                    raise ParseError(f"expected a variable, got {val or 'end of input'!r}", pos)
                idx = _var_index(val, names)
                if idx is None:
                    raise ParseError(f"unknown variable {val!r}", pos)
                if n is not None and idx >= n:
                    raise ParseError(f"variable {val!r} exceeds {n} variables", pos)
                i += 1
                e = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    i += 1
                    kind, val, pos = peek()
                    if kind != "num":
                        raise ParseError("expected an exponent", pos)
                    e = int(val)
                    i += 1
                exps[idx] = exps.get(idx, 0) + e
                if peek()[0] == "op" and peek()[1] == "*":
                    i += 1
                    continue
                break
            monomials.append((exps, pos))
        else:
            raise ParseError(f"expected a monomial, got {val or 'end of input'!r}", pos)
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val == ",":
            i += 1
            continue
        raise ParseError(f"unexpected {val!r}", pos)

    if n is None:
        used = [k for exps, _ in monomials for k in exps]
        n = max(used) + 1 if used else 1
    gens = []
    for exps, _ in monomials:
        v = [0] * n
        for k, e in exps.items():
            v[k] = e
        gens.append(tuple(v))
    return MonomialIdeal(n, gens)


def format_monomial(b: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    names = names or default_names(len(b))
    parts = []
    for name, e in zip(names, b):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(ideal: MonomialIdeal, names: Optional[Sequence[str]] = None) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(format_monomial(g, names) for g in ideal.gens)


def to_json_obj(ideal: MonomialIdeal) -> dict:
    return {"n": ideal.n, "gens": [list(g) for g in ideal.gens]}


def from_json_obj(obj) -> MonomialIdeal:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return MonomialIdeal(int(obj["n"]), [tuple(g) for g in obj["gens"]])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed ideal JSON: {exc}") from None
