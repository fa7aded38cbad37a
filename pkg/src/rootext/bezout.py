"""Bezoutian determinants of difference derivatives and the extension of
bounded root functionals.

The (n+1)x(n+1) matrix has row ``k`` equal to
``(D^k f_1, ..., D^k f_n, D^k F)`` and last row ``(f(x), F(x))``; replacing
the last row by ``(f(y), F(y))`` leaves the determinant unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .diffderiv import CovectorXY, nabla, nabla_swapped
from .errors import (DegreeOverflowError, NotAnnihilatingError, PreconditionError,
                     TelescopingError)
from .functional import Functional, apply_in_y, functional_apply
from .ideal import MembershipWitness, first_violation, span_membership
from .linalg import det_bareiss, det_cofactor
from .ring import (MINUS_INFINITY, Poly, PolyXY, SystemProfile, embed_x, embed_y,
                   monomials_upto)

log = logging.getLogger(__name__)

CANONICAL = "canonical"
SWAPPED = "swapped"

Choice = Union[str, CovectorXY]


@dataclass(frozen=True)
class BezoutConfig:
    """Which difference derivatives enter the determinant.

    ``derivative_choice_f`` is one selector for all generators or a sequence
    with one selector per generator; a selector is ``"canonical"``,
    ``"swapped"`` or an explicit ``CovectorXY``.
    """

    derivative_choice_f: Union[Choice, Tuple[Choice, ...]] = CANONICAL
    derivative_choice_F: Choice = CANONICAL

    def f_choices(self, n: int) -> Tuple[Choice, ...]:
        c = self.derivative_choice_f
        if isinstance(c, (str, CovectorXY)):
            return (c,) * n
        c = tuple(c)
        if len(c) != n:
            raise ValueError(f"expected {n} derivative selectors, got {len(c)}")
        return c


def _resolve(choice: Choice, P: Poly, max_degree) -> CovectorXY:
    if isinstance(choice, CovectorXY):
        D = choice
        if D.nvars != P.nvars or not D.is_derivative_of(P):
            raise TelescopingError(f"supplied covector is not a difference derivative of {P}")
    elif choice == CANONICAL:
        D = nabla(P)
    elif choice == SWAPPED:
        D = nabla_swapped(nabla(P))
    else:
        raise ValueError(f"unknown derivative selector {choice!r}")
    if D.degree() > max_degree:
        raise PreconditionError(f"difference derivative of degree {D.degree()} exceeds {max_degree}")
    return D


def generator_derivatives(f: SystemProfile, cfg: BezoutConfig) -> List[CovectorXY]:
    return [_resolve(c, p, p.degree() - 1) for c, p in zip(cfg.f_choices(f.nvars), f.polys)]


def target_derivative(F: Poly, d, cfg: BezoutConfig) -> CovectorXY:
    # degree <= d - 1 is all the constructions need; it is monotonicity when d = deg F
    return _resolve(cfg.derivative_choice_F, F, d - 1)


def _budget(F: Poly, d) -> int:
    if d is None:
        return max(int(F.degree()), 0) if not F.is_zero() else 0
    if F.degree() > d:
        raise PreconditionError(f"deg F = {F.degree()} exceeds the degree budget {d}")
    return d


def bezout_matrix(f: SystemProfile, F: Poly, cfg: Optional[BezoutConfig] = None,
                  d=None, last_row: str = "x") -> List[List[PolyXY]]:
    cfg = cfg or BezoutConfig()
    if F.nvars != f.nvars:
        raise ValueError("nvars mismatch")
    d = _budget(F, d)
    Df = generator_derivatives(f, cfg)
    DF = target_derivative(F, d, cfg)
    return _matrix(f, F, Df, DF, last_row)


def _matrix(f, F, Df, DF, last_row):
    n = f.nvars
    rows = [[Df[i][k] for i in range(n)] + [DF[k]] for k in range(n)]
    embed = embed_x if last_row == "x" else embed_y
    rows.append([embed(p) for p in f.polys] + [embed(F)])
    return rows


def determinant(matrix, method: str = "cofactor") -> PolyXY:
    n = matrix[0][0].nvars
    zero, one = PolyXY.zero(n), PolyXY.constant(n, 1)
    if method == "cofactor":
        return det_cofactor(matrix, zero, one)
    if method == "bareiss":
        return det_bareiss(matrix, zero, one)
    raise ValueError(f"unknown determinant method {method!r}")


def bezout_poly(f: SystemProfile, F: Poly, cfg: Optional[BezoutConfig] = None, d=None) -> PolyXY:
    """The Bezoutian determinant ``R(x, y)`` of ``f`` bordered by ``F``.

    Both last-row forms are expanded and compared; ``deg R <= delta_f + d``
    is checked.
    """
    cfg = cfg or BezoutConfig()
    d = _budget(F, d)
    Df = generator_derivatives(f, cfg)
    DF = target_derivative(F, d, cfg)
    rx = determinant(_matrix(f, F, Df, DF, "x"))
    ry = determinant(_matrix(f, F, Df, DF, "y"))
    if rx != ry:
        raise AssertionError("last-row forms of the Bezoutian disagree")
    if rx.degree() > f.delta_f + d:
        raise AssertionError(f"deg R = {rx.degree()} exceeds delta_f + d = {f.delta_f + d}")
    return rx


# -- choice-independence witnesses ---------------------------------------------

def _antisym(a: Poly, b: Poly) -> PolyXY:
    return embed_x(a) * embed_y(b) - embed_y(a) * embed_x(b)


def choice_addend_witness(f: SystemProfile, F: Poly, R1: PolyXY, R2: PolyXY, d,
                          vary: str = "F") -> Optional[MembershipWitness]:
    """Express ``R1 - R2`` through ``f_i(x)f_j(y) - f_i(y)f_j(x)`` (``i < j``,
    multiplier degree <= delta_f + d - deg f_i - deg f_j) and, when
    ``vary == "f"``, also ``f_i(x)F(y) - f_i(y)F(x)`` (multiplier degree
    <= delta_f - deg f_i).  Returns None if no such expression exists."""
    if vary not in ("F", "f"):
        raise ValueError("vary must be 'F' or 'f'")
    n = f.nvars
    gens, caps = [], []
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(_antisym(f[i], f[j]))
            caps.append(f.delta_f + d - f.degrees[i] - f.degrees[j])
    if vary == "f":
        for i in range(n):
            gens.append(_antisym(f[i], F))
            caps.append(f.delta_f - f.degrees[i])
    target = R1 - R2
    if target.is_zero():
        return MembershipWitness(tuple(gens), {}, PolyXY.zero(n))
    if not gens:
        return None
    return span_membership(target, gens, caps)


# -- extension step ----------------------------------------------------------------

def _require_annihilation(L: Functional, delta: int, f: SystemProfile, name: str = "L") -> None:
    if delta < 0:
        raise PreconditionError("delta must be >= 0")
    if L.nvars != f.nvars:
        raise ValueError("nvars mismatch")
    need = f.delta_f + delta
    if L.bound < need:
        raise DegreeOverflowError(f"{name} is determined up to degree {L.bound} < {need}")
    bad = first_violation(L, f, need)
    if bad is not None:
        (i, a), g, v = bad
        raise NotAnnihilatingError(
            f"{name} does not annul (f)^<={need}: {name}.({g}) = {v} "
            f"(shift x^{list(a)} of f{i + 1})", generator=g, value=v)


def extend_step(L: Functional, delta: int, f: SystemProfile, F: Poly,
                cfg: Optional[BezoutConfig] = None, d=None) -> Poly:
    """``H(x) = L(y_*).R(x, y)``.

    ``L`` must annul ``(f)^{<= delta_f + delta}`` and be determined up to the
    y-degree of ``R`` (at most ``delta_f + d``); extend it first if needed.
    """
    _require_annihilation(L, delta, f)
    R = bezout_poly(f, F, cfg, d)
    return apply_in_y(L, R)


def h_degree_bound(f: SystemProfile, d, delta: int) -> int:
    return max(f.delta_f, d - delta - 1)


class BezoutKernel:
    """Cofactors of the last column for the ``(f(y), F(y))`` form:
    ``R = sum_k D^k F * cofactors[k] + F(y) * jacobian``, with ``jacobian``
    the determinant of the generator block.

    Caches ``L``-shifted pairings so many targets can be extended against
    one functional cheaply.
    """

    def __init__(self, f: SystemProfile, cfg: Optional[BezoutConfig] = None):
        cfg = cfg or BezoutConfig()
        self.f = f
        self.cfg = cfg
        n = f.nvars
        Df = generator_derivatives(f, cfg)
        block = [[Df[i][k] for i in range(n)] for k in range(n)]
        fy = [embed_y(p) for p in f.polys]
        self.jacobian = determinant(block)
        self.cofactors: List[PolyXY] = []
        for r in range(n):
            minor = [row for k, row in enumerate(block) if k != r] + [fy]
            c = determinant(minor)
            self.cofactors.append(-c if (r + n) % 2 else c)

    def bezoutian(self, F: Poly, DF: CovectorXY) -> PolyXY:
        total = embed_y(F) * self.jacobian
        for k, c in enumerate(self.cofactors):
            total = total + DF[k] * c
        return total

    def pairing(self, L: Functional) -> "_ShiftedPairing":
        return _ShiftedPairing(self, L)


class _ShiftedPairing:
    def __init__(self, kernel: BezoutKernel, L: Functional):
        self.kernel = kernel
        self.L = L
        self.n = L.nvars
        self._cache: Dict[Tuple[int, tuple], Poly] = {}

    def _shifted(self, which: int, b: tuple) -> Poly:
        # L(y_*) applied to y^b * P(x, y), P = cofactor ``which`` (or jacobian for -1)
        key = (which, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        P = self.kernel.jacobian if which < 0 else self.kernel.cofactors[which]
        n = self.n
        if P.y_degree() + sum(b) > self.L.bound:
            raise DegreeOverflowError(
                f"y-degree {P.y_degree() + sum(b)} exceeds functional bound {self.L.bound}")
        table = self.L.coeffs
        out: Dict[tuple, Fraction] = {}
        for e, c in P.terms.items():
            beta = tuple(u + v for u, v in zip(e[n:], b))
            val = table.get(beta)
            if val is not None:
                a = e[:n]
                out[a] = out.get(a, 0) + val * c
        res = Poly._raw(n, {a: c for a, c in out.items() if c})
        self._cache[key] = res
        return res

    def extend(self, F: Poly, DF: CovectorXY) -> Poly:
        """``L(y_*).R(x, y)`` for target ``F`` with derivative ``DF``."""
        n = self.n
        acc: Dict[tuple, Fraction] = {}

        def add(part: Poly, a: tuple, c: Fraction):
            for e, v in part.terms.items():
                key = tuple(u + w for u, w in zip(e, a))
                acc[key] = acc.get(key, 0) + c * v

        zero_x = (0,) * n
        for g, c in F.terms.items():
            add(self._shifted(-1, g), zero_x, c)
        for k in range(n):
            for e, c in DF[k].terms.items():
                add(self._shifted(k, e[n:]), e[:n], c)
        return Poly._raw(n, {a: c for a, c in acc.items() if c})


# -- product functional ------------------------------------------------------------

def _operator_choice(cfg: BezoutConfig) -> str:
    c = cfg.derivative_choice_F
    if not isinstance(c, str) or c not in (CANONICAL, SWAPPED):
        raise ValueError("the product functional needs a derivative operator "
                         "('canonical' or 'swapped'), not a fixed covector")
    return c


def _operator(choice: str, F: Poly) -> CovectorXY:
    D = nabla(F)
    return D if choice == CANONICAL else nabla_swapped(D)


def product_bound(f: SystemProfile, delta1: int, delta2: int) -> int:
    return f.delta_f + delta1 + delta2 + 1


def product_functional(L1: Functional, delta1: int, L2: Functional, delta2: int,
                       f: SystemProfile, cfg: Optional[BezoutConfig] = None) -> Functional:
    """``L = L1(x_*).L2(y_*).R`` tabulated on every monomial of degree
    <= delta_f + delta1 + delta2 + 1.

    ``L2`` is extended by zero wherever the Bezoutian needs values beyond its
    bound; the result does not depend on that extension.
    """
    cfg = cfg or BezoutConfig()
    choice = _operator_choice(cfg)
    _require_annihilation(L1, delta1, f, "L1")
    _require_annihilation(L2, delta2, f, "L2")
    n = f.nvars
    top = product_bound(f, delta1, delta2)
    kernel = BezoutKernel(f, cfg)
    need = f.delta_f + top
    L2x = L2 if L2.bound >= need else L2.extended(need)
    pairing = kernel.pairing(L2x)
    table = {}
    for g in monomials_upto(n, top):
        F = Poly.monomial(n, g)
        H = pairing.extend(F, _operator(choice, F))
        table[g] = functional_apply(L1, H)
    return Functional(n, top, table)


def first_commutativity_mismatch(L1: Functional, delta1: int, L2: Functional, delta2: int,
                                 f: SystemProfile, cfg: Optional[BezoutConfig] = None):
    """First monomial (graded-lex) where the two orders of the product
    functional differ, as ``(exponent, value12, value21)``; None if equal."""
    a = product_functional(L1, delta1, L2, delta2, f, cfg)
    b = product_functional(L2, delta2, L1, delta1, f, cfg)
    for g in monomials_upto(f.nvars, a.bound):
        if a(g) != b(g):
            return g, a(g), b(g)
    return None


def verify_commutativity(L1: Functional, delta1: int, L2: Functional, delta2: int,
                         f: SystemProfile, cfg: Optional[BezoutConfig] = None) -> bool:
    bad = first_commutativity_mismatch(L1, delta1, L2, delta2, f, cfg)
    if bad is not None:
        g, u, v = bad
        log.error("product functionals differ at x^%s: %s != %s", list(g), u, v)
        return False
    return True
