"""Independent reference computations in sympy."""

from fractions import Fraction

import sympy as sp

from rootext.ring import Poly, PolyXY


def xs(n):
    return sp.symbols(f"x1:{n + 1}")


def ys(n):
    return sp.symbols(f"y1:{n + 1}")


def to_sympy(p):
    n = p.nvars
    gens = list(xs(n)) + (list(ys(n)) if isinstance(p, PolyXY) else [])
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for g, k in zip(gens, e):
            term *= g ** k
        expr += term
    return sp.expand(expr)


def from_sympy(expr, n, xy=False):
    gens = list(xs(n)) + (list(ys(n)) if xy else [])
    poly = sp.Poly(sp.expand(expr), *gens)
    terms = {tuple(m): Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c}
    return (PolyXY if xy else Poly)(n, terms)


def telescoping_component(F: Poly, k: int):
    """k-th canonical difference derivative by sympy polynomial division."""
    n = F.nvars
    X, Y = xs(n), ys(n)
    expr = to_sympy(F)
    a = expr.subs({X[j]: Y[j] for j in range(k)}, simultaneous=True)
    b = a.subs(X[k], Y[k])
    q, r = sp.div(sp.expand(a - b), X[k] - Y[k], X[k])
    assert sp.expand(r) == 0
    return from_sympy(q, n, xy=True)


def bezout_det(system, F, last_row="x"):
    """Bezoutian via sympy's determinant of the canonical-derivative matrix."""
    n = F.nvars
    X, Y = xs(n), ys(n)
    rows = []
    for k in range(n):
        rows.append([to_sympy(telescoping_component(p, k)) for p in system.polys]
                    + [to_sympy(telescoping_component(F, k))])
    last = [to_sympy(p) for p in system.polys] + [to_sympy(F)]
    if last_row == "y":
        last = [e.subs(dict(zip(X, Y)), simultaneous=True) for e in last]
    rows.append(last)
    return from_sympy(sp.Matrix(rows).det(method="berkowitz"), n, xy=True)


def rank(rows, ncols):
    m = sp.Matrix([[sp.Rational(str(r.get(j, 0))) for j in range(ncols)] for r in rows])
    return m.rank() if rows else 0
