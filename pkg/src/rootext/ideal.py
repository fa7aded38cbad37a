"""Truncated ideal pieces, Macaulay matrices and bounded root functionals.

``(f)^{<=d}`` is the linear span of the shifted generators ``x^a * f_i``
with ``|a| + deg f_i <= d``; it is empty (the zero space) for ``d`` below
every generator degree, in particular for negative ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import ColumnCapExceeded, PreconditionError
from .functional import Functional, functional_apply
from .linalg import Echelon
from .ring import (Exponent, Poly, PolyXY, SystemProfile, count_monomials, grlex_key,
                   monomials_upto)

DEFAULT_COLUMN_CAP = 10_000

Label = Tuple[int, Exponent]
Generators = Union[SystemProfile, Sequence[Poly]]


def _polys(f: Generators) -> Tuple:
    return tuple(f.polys) if isinstance(f, SystemProfile) else tuple(f)


def _width(p) -> int:
    return p.nvars * p._blocks


def shifted_generators(gens: Sequence, caps: Sequence) -> List[Tuple[Label, object]]:
    """Products ``z^a * g_i`` for every monomial ``z^a`` of degree <= caps[i]
    in the generators' own variables (``n`` or ``2n`` of them)."""
    out = []
    for i, (g, cap) in enumerate(zip(gens, caps)):
        if g.is_zero() or cap < 0:
            continue
        for a in monomials_upto(_width(g), cap):
            out.append(((i, a), g.shift(a)))
    return out


def truncated_generators(f: Generators, d) -> List[Poly]:
    """Spanning set ``{x^a f_i : |a| + deg f_i <= d}`` of ``(f)^{<=d}``."""
    return [p for _, p in labelled_generators(f, d)]


def labelled_generators(f: Generators, d) -> List[Tuple[Label, Poly]]:
    gens = _polys(f)
    return shifted_generators(gens, [d - g.degree() for g in gens])


@dataclass
class MacaulayMatrix:
    """Coefficients of the truncated generators over the monomials of degree
    <= d (ascending graded-lex columns)."""

    system: Tuple[Poly, ...]
    d: int
    row_labels: List[Label]
    columns: List[Exponent]
    rows: List[Dict[int, Fraction]]

    def dense(self) -> List[List[Fraction]]:
        return [[r.get(j, Fraction(0)) for j in range(len(self.columns))] for r in self.rows]

    def echelon(self) -> Echelon:
        e = Echelon()
        for r in self.rows:
            e.add_row(r)
        return e

    def rank(self) -> int:
        return self.echelon().rank


def _check_cap(nvars: int, d, cap: Optional[int]) -> int:
    ncols = count_monomials(nvars, d)
    if cap is not None and ncols > cap:
        raise ColumnCapExceeded(f"C({nvars}+{d}, {nvars}) = {ncols} columns exceed the cap {cap}")
    return ncols


def macaulay_matrix(f: Generators, d: int, cap: Optional[int] = DEFAULT_COLUMN_CAP) -> MacaulayMatrix:
    gens = _polys(f)
    n = gens[0].nvars
    _check_cap(n, d, cap)
    columns = monomials_upto(n, d)
    index = {e: j for j, e in enumerate(columns)}
    labels, rows = [], []
    for label, p in labelled_generators(gens, d):
        labels.append(label)
        rows.append({index[e]: c for e, c in p.terms.items()})
    return MacaulayMatrix(gens, d, labels, columns, rows)


@dataclass
class MembershipWitness:
    """``target == sum_i generators[i] * multiplier_i`` where
    ``multiplier_i = sum_a combiners[(i, a)] * z^a``."""

    generators: Tuple
    combiners: Dict[Label, Fraction] = field(default_factory=dict)
    ambient: object = None  # zero of the ambient ring, for empty generator lists

    def multipliers(self) -> List:
        out = []
        for i, g in enumerate(self.generators):
            terms = {a: c for (j, a), c in self.combiners.items() if j == i}
            out.append(type(g)(g.nvars, terms))
        return out

    def reconstruct(self):
        z = self.ambient if self.ambient is not None else self.generators[0]
        total = type(z).zero(z.nvars)
        for g, m in zip(self.generators, self.multipliers()):
            total = total + g * m
        return total

    def respects(self, caps: Sequence) -> bool:
        """Per-term bound ``deg multiplier_i <= caps[i]``."""
        return all(m.degree() <= cap for m, cap in zip(self.multipliers(), caps))

    def to_json(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "multipliers": [str(m) for m in self.multipliers()],
        }


def span_membership(target, generators: Sequence, caps: Sequence) -> Optional[MembershipWitness]:
    """Decide whether ``target`` lies in ``span{z^a g_i : |a| <= caps[i]}``.

    Works for ``Poly`` and ``PolyXY`` alike; returns the first solution
    under graded-lex first-nonzero pivoting, or None.
    """
    generators = tuple(generators)
    shifted = shifted_generators(generators, caps)
    monos = set(target.terms)
    for _, p in shifted:
        monos.update(p.terms)
    columns = sorted(monos, key=grlex_key)
    index = {e: j for j, e in enumerate(columns)}
    ech = Echelon(track=True)
    for _, p in shifted:
        ech.add_row({index[e]: c for e, c in p.terms.items()})
    sol = ech.solve({index[e]: c for e, c in target.terms.items()})
    if sol is None:
        return None
    combiners = {shifted[r][0]: c for r, c in sol.items()}
    return MembershipWitness(generators, combiners, type(target).zero(target.nvars))


def membership(F: Poly, f: Generators, d) -> Optional[MembershipWitness]:
    """Witness ``g`` with ``F = sum f_i g^i`` and ``deg f_i + deg g^i <= d``."""
    if F.degree() > d:
        raise PreconditionError(f"deg F = {F.degree()} exceeds d = {d}")
    gens = _polys(f)
    if F.is_zero():
        return MembershipWitness(gens, {}, Poly.zero(F.nvars))
    return span_membership(F, gens, [d - g.degree() for g in gens])


@dataclass
class BoundedRootBasis:
    system: SystemProfile
    D: int
    basis: List[Functional]
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "system": self.system.to_lines(),
            "nvars": self.system.nvars,
            "delta_f": self.system.delta_f,
            "D": self.D,
            "dimension": self.dimension,
            "basis": [L.to_json() for L in self.basis],
        }


def root_functional_basis(f: SystemProfile, D: int,
                          cap: Optional[int] = DEFAULT_COLUMN_CAP) -> BoundedRootBasis:
    """Basis of the functionals on degree <= D that annul ``(f)^{<=D}``,
    as the reduced-echelon kernel of the Macaulay matrix."""
    if D < 0:
        raise PreconditionError("D must be >= 0")
    mac = macaulay_matrix(f, D, cap)
    ech = mac.echelon()
    basis = [
        Functional(f.nvars, D, {mac.columns[j]: v for j, v in vec.items()})
        for vec in ech.kernel(len(mac.columns))
    ]
    return BoundedRootBasis(f, D, basis, ech.rank)


def first_violation(L: Functional, f: Generators, d):
    """First truncated generator ``x^a f_i`` (as ``(label, poly, value)``) that
    ``L`` does not annul, or None."""
    if d > L.bound:
        raise PreconditionError(f"d = {d} exceeds the functional's bound {L.bound}")
    for label, g in labelled_generators(f, d):
        v = functional_apply(L, g)
        if v:
            return label, g, v
    return None


def annihilates(L: Functional, f: Generators, d) -> bool:
    return first_violation(L, f, d) is None
