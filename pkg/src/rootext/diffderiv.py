"""Difference derivatives.

A difference derivative of ``F`` is a covector ``(D_1, ..., D_n)`` over
``(x, y)`` with ``sum_k (x_k - y_k) * D_k = F(x) - F(y)``.  The canonical
one telescopes through the variables in order ``k = 1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from .errors import PreconditionError, TelescopingError
from .ring import MINUS_INFINITY, Poly, PolyXY, embed_x, embed_y, subst_swap_xy


@dataclass(frozen=True)
class CovectorXY:
    nvars: int
    comps: Tuple[PolyXY, ...]

    def __post_init__(self):
        comps = tuple(self.comps)
        object.__setattr__(self, "comps", comps)
        if len(comps) != self.nvars:
            raise ValueError(f"expected {self.nvars} components, got {len(comps)}")
        for c in comps:
            if not isinstance(c, PolyXY) or c.nvars != self.nvars:
                raise ValueError("components must be PolyXY over the same variables")

    @classmethod
    def zero(cls, nvars: int) -> "CovectorXY":
        return cls(nvars, tuple(PolyXY.zero(nvars) for _ in range(nvars)))

    def __getitem__(self, k: int) -> PolyXY:
        return self.comps[k]

    def __iter__(self) -> Iterator[PolyXY]:
        return iter(self.comps)

    def __len__(self) -> int:
        return self.nvars

    def __add__(self, other: "CovectorXY") -> "CovectorXY":
        return CovectorXY(self.nvars, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "CovectorXY") -> "CovectorXY":
        return CovectorXY(self.nvars, tuple(a - b for a, b in zip(self.comps, other.comps)))

    def scale(self, c) -> "CovectorXY":
        return CovectorXY(self.nvars, tuple(a.scale(c) for a in self.comps))

    def degree(self):
        return max((c.degree() for c in self.comps), default=MINUS_INFINITY)

    def contract(self) -> PolyXY:
        """``sum_k (x_k - y_k) * comps[k]``."""
        n = self.nvars
        total = PolyXY.zero(n)
        for k, c in enumerate(self.comps):
            total = total + (PolyXY.xvar(n, k) - PolyXY.yvar(n, k)) * c
        return total

    def is_derivative_of(self, F: Poly) -> bool:
        return self.contract() == embed_x(F) - embed_y(F)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.comps) + ")"


def _x_to_y(q: PolyXY, upto: int) -> PolyXY:
    """Substitute ``x_j -> y_j`` for all ``j < upto``."""
    n = q.nvars
    out: Dict[tuple, Fraction] = {}
    for e, c in q.terms.items():
        e = list(e)
        for j in range(upto):
            e[n + j] += e[j]
            e[j] = 0
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return PolyXY._raw(n, {e: c for e, c in out.items() if c})


def divide_by_difference(q: PolyXY, k: int) -> PolyXY:
    """Exact quotient of ``q`` by ``x_k - y_k``, by synthetic division in x_k.

    Raises ``ArithmeticError`` when the remainder is nonzero.
    """
    n = q.nvars
    # coefficients of q as a polynomial in x_k
    by_power: Dict[int, Dict[tuple, Fraction]] = {}
    for e, c in q.terms.items():
        a = e[k]
        rest = e[:k] + (0,) + e[k + 1:]
        by_power.setdefault(a, {})[rest] = c
    if not by_power:
        return PolyXY.zero(n)
    top = max(by_power)
    yk = n + k
    quotient: Dict[tuple, Fraction] = {}
    carry: Dict[tuple, Fraction] = {}
    # q_{a-1} = c_a + y_k * q_a, from the top power down
    for a in range(top, 0, -1):
        cur = dict(by_power.get(a, {}))
        for e, c in carry.items():
            e2 = e[:yk] + (e[yk] + 1,) + e[yk + 1:]
            cur[e2] = cur.get(e2, 0) + c
        cur = {e: c for e, c in cur.items() if c}
        for e, c in cur.items():
            quotient[e[:k] + (a - 1,) + e[k + 1:]] = c
        carry = cur
    remainder = dict(by_power.get(0, {}))
    for e, c in carry.items():
        e2 = e[:yk] + (e[yk] + 1,) + e[yk + 1:]
        remainder[e2] = remainder.get(e2, 0) + c
    if any(remainder.values()):
        raise ArithmeticError(f"x{k + 1} - y{k + 1} does not divide the numerator")
    return PolyXY._raw(n, quotient)


def difference_operator(q: PolyXY, k: int) -> PolyXY:
    """Canonical k-th difference derivative acting on the x-block of ``q``:
    ``[q(y_<k, x_k, x_>k, y) - q(y_<k, y_k, x_>k, y)] / (x_k - y_k)``."""
    a = _x_to_y(q, k)
    b = _x_to_y(a, k + 1)
    return divide_by_difference(a - b, k)


def nabla(F: Poly) -> CovectorXY:
    """Canonical (monotonous) difference derivative of ``F``."""
    n = F.nvars
    q = embed_x(F)
    return CovectorXY(n, tuple(difference_operator(q, k) for k in range(n)))


def nabla_swapped(D: CovectorXY) -> CovectorXY:
    """``D(y, x)``: again a difference derivative of the same polynomial."""
    return CovectorXY(D.nvars, tuple(subst_swap_xy(c) for c in D.comps))


def nabla_product(F: Poly, G: Poly, DF: CovectorXY, DG: CovectorXY) -> CovectorXY:
    """Difference derivative of ``F*G`` from the product rule
    ``DF(x,y)*G(y) + F(x)*DG(x,y)``.

    The result need not be monotonous when ``deg(F*G) < deg F + deg G``.
    """
    if not (F.nvars == G.nvars == DF.nvars == DG.nvars):
        raise ValueError("nvars mismatch")
    gy = embed_y(G)
    fx = embed_x(F)
    return CovectorXY(F.nvars, tuple(a * gy + fx * b for a, b in zip(DF.comps, DG.comps)))


@dataclass(frozen=True)
class DiscrepancyDecomposition:
    """``t_table[(k, l)]`` (0-based, ``k < l``) such that
    ``D1 - D2 = sum_{k<l} ((x_k - y_k) e_l - (x_l - y_l) e_k) * T^{kl}``."""

    nvars: int
    t_table: Dict[Tuple[int, int], PolyXY]
    degree_bound: int

    def reconstruct(self) -> CovectorXY:
        n = self.nvars
        comps = [PolyXY.zero(n) for _ in range(n)]
        for (k, l), t in self.t_table.items():
            comps[l] = comps[l] + (PolyXY.xvar(n, k) - PolyXY.yvar(n, k)) * t
            comps[k] = comps[k] - (PolyXY.xvar(n, l) - PolyXY.yvar(n, l)) * t
        return CovectorXY(n, tuple(comps))

    def max_degree(self):
        return max((t.degree() for t in self.t_table.values()), default=MINUS_INFINITY)


def decompose_difference(D1: CovectorXY, D2: CovectorXY, d: int) -> DiscrepancyDecomposition:
    """Write the discrepancy of two difference derivatives of one polynomial
    as a combination of the Koszul relations of ``x - y``."""
    if D1.nvars != D2.nvars:
        raise ValueError("nvars mismatch")
    n = D1.nvars
    W = D1 - D2
    if not W.contract().is_zero():
        raise TelescopingError("covectors are difference derivatives of different polynomials")
    for name, D in (("D1", D1), ("D2", D2)):
        if D.degree() > d - 1:
            raise PreconditionError(f"{name} has degree {D.degree()} > {d - 1}")
    table = {}
    for k in range(n):
        for l in range(k + 1, n):
            table[(k, l)] = difference_operator(W[l], k)
    out = DiscrepancyDecomposition(n, table, d)
    if out.reconstruct() != W:
        raise AssertionError("discrepancy reconstruction failed")
    if out.max_degree() > d - 2:
        raise AssertionError("discrepancy term exceeds degree d - 2")
    return out
