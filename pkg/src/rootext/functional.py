"""Linear functionals determined on a truncated polynomial space.

A ``Functional`` with bound ``D`` is a finite table ``alpha -> value`` over
the monomials of degree <= D; it pairs with a polynomial ``F`` of degree
<= D as ``sum_alpha value(alpha) * coeff_F(alpha)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .errors import DegreeOverflowError
from .ring import Exponent, Poly, PolyXY, coerce, grlex_key, monomials_upto


class Functional:
    __slots__ = ("nvars", "bound", "coeffs")

    def __init__(self, nvars: int, bound: int, coeffs: Optional[Mapping] = None):
        if bound < 0:
            raise ValueError("bound must be >= 0")
        self.nvars = nvars
        self.bound = int(bound)
        table: Dict[Exponent, Fraction] = {}
        for exp, v in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp}")
            if sum(exp) > bound:
                raise ValueError(f"exponent {exp} exceeds bound {bound}")
            v = coerce(v)
            if v:
                table[exp] = v
        self.coeffs = table

    @classmethod
    def zero(cls, nvars: int, bound: int) -> "Functional":
        return cls(nvars, bound)

    @classmethod
    def dual_monomial(cls, nvars: int, bound: int, exp: Sequence[int]) -> "Functional":
        return cls(nvars, bound, {tuple(exp): 1})

    def __call__(self, exp: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def apply(self, F: Poly) -> Fraction:
        return functional_apply(self, F)

    def restrict(self, bound: int) -> "Functional":
        if bound > self.bound:
            raise ValueError("restriction bound exceeds the functional's bound")
        return Functional(self.nvars, bound,
                          {e: v for e, v in self.coeffs.items() if sum(e) <= bound})

    def extended(self, bound: int, values: Optional[Mapping] = None) -> "Functional":
        """Same table on degree <= self.bound, with ``values`` (default zero)
        on the new monomials of degree in (self.bound, bound]."""
        if bound < self.bound:
            raise ValueError("extension bound is below the functional's bound")
        table = dict(self.coeffs)
        for e, v in (values or {}).items():
            if sum(e) <= self.bound:
                raise ValueError("extension may not overwrite determined values")
            table[tuple(e)] = v
        return Functional(self.nvars, bound, table)

    def scale(self, c) -> "Functional":
        c = coerce(c)
        return Functional(self.nvars, self.bound, {e: v * c for e, v in self.coeffs.items()})

    def __add__(self, other: "Functional") -> "Functional":
        return functional_lincomb([(1, self), (1, other)])

    def __sub__(self, other: "Functional") -> "Functional":
        return functional_lincomb([(1, self), (-1, other)])

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return (self.nvars, self.bound, self.coeffs) == (other.nvars, other.bound, other.coeffs)

    def __hash__(self):
        return hash((self.nvars, self.bound, frozenset(self.coeffs.items())))

    def compare(self, other: "Functional") -> Tuple[bool, bool]:
        """Compare on the smaller bound; returns ``(equal, partial)`` where
        ``partial`` flags that the bounds differ."""
        if self.nvars != other.nvars:
            raise ValueError("nvars mismatch")
        b = min(self.bound, other.bound)
        return self.restrict(b).coeffs == other.restrict(b).coeffs, self.bound != other.bound

    def dense(self) -> list:
        """Values on ``monomials_upto(nvars, bound)`` in ascending graded-lex order."""
        return [self(e) for e in monomials_upto(self.nvars, self.bound)]

    def to_json(self) -> dict:
        items = sorted(self.coeffs.items(), key=lambda t: grlex_key(t[0]))
        return {
            "nvars": self.nvars,
            "bound": self.bound,
            "coeffs": [{"exp": list(e), "val": _fmt(v)} for e, v in items],
        }

    @classmethod
    def from_json(cls, data) -> "Functional":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["nvars"]),
            int(data["bound"]),
            {tuple(int(a) for a in item["exp"]): Fraction(str(item["val"]))
             for item in data["coeffs"]},
        )

    def __repr__(self):
        body = ", ".join(f"{e}: {_fmt(v)}" for e, v in
                         sorted(self.coeffs.items(), key=lambda t: grlex_key(t[0])))
        return f"Functional(nvars={self.nvars}, bound={self.bound}, {{{body}}})"


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def functional_apply(L: Functional, F: Poly) -> Fraction:
    if F.nvars != L.nvars:
        raise ValueError("nvars mismatch")
    if F.degree() > L.bound:
        raise DegreeOverflowError(
            f"degree {F.degree()} polynomial outside a functional determined up to {L.bound}")
    table = L.coeffs
    total = Fraction(0)
    for e, c in F.terms.items():
        v = table.get(e)
        if v is not None:
            total += v * c
    return total


def eval_functional(point: Sequence, D: int) -> Functional:
    """Evaluation at ``point`` restricted to degree <= D."""
    point = [coerce(v) for v in point]
    n = len(point)
    table = {}
    for e in monomials_upto(n, D):
        v = Fraction(1)
        for p, a in zip(point, e):
            if a:
                v *= p ** a
        table[e] = v
    return Functional(n, D, table)


def apply_in_y(L: Functional, Q: PolyXY) -> Poly:
    """Apply ``L`` to the y-block of ``Q``, leaving a polynomial in x."""
    n = Q.nvars
    if n != L.nvars:
        raise ValueError("nvars mismatch")
    if Q.y_degree() > L.bound:
        raise DegreeOverflowError(
            f"y-degree {Q.y_degree()} exceeds functional bound {L.bound}")
    table = L.coeffs
    out: Dict[Exponent, Fraction] = {}
    for e, c in Q.terms.items():
        v = table.get(e[n:])
        if v is not None:
            a = e[:n]
            out[a] = out.get(a, 0) + v * c
    return Poly._raw(n, {e: c for e, c in out.items() if c})


def functional_lincomb(terms: Iterable[Tuple[object, Functional]]) -> Functional:
    terms = list(terms)
    if not terms:
        raise ValueError("empty linear combination")
    n = terms[0][1].nvars
    if any(L.nvars != n for _, L in terms):
        raise ValueError("nvars mismatch")
    bound = min(L.bound for _, L in terms)
    table: Dict[Exponent, Fraction] = {}
    for c, L in terms:
        c = coerce(c)
        if not c:
            continue
        for e, v in L.coeffs.items():
            if sum(e) <= bound:
                table[e] = table.get(e, 0) + c * v
    return Functional(n, bound, table)
