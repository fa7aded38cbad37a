from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootext.errors import ColumnCapExceeded, PreconditionError
from rootext.functional import Functional, eval_functional, functional_lincomb
from rootext.ideal import (annihilates, first_violation, macaulay_matrix, membership,
                           root_functional_basis, span_membership, truncated_generators)
from rootext.ring import Poly, SystemProfile, monomials_upto, poly_parse

from . import oracles
from .strategies import polys, rationals



@st.composite
def systems(draw, nmax=3, degmax=3):
    n = draw(st.integers(1, nmax))
    out = []
    for _ in range(n):
        p = draw(polys(n, max_degree=degmax, max_terms=3))
        out.append(p if p.degree() >= 1 else p + Poly.monomial(n, (0,) * (n - 1) + (1,)))
    return SystemProfile(out)


def test_truncated_generators_examples():
    x2 = SystemProfile.parse(["x1^2"])
    assert set(truncated_generators(x2, 3)) == {poly_parse("x1^2", 1), poly_parse("x1^3", 1)}
    assert truncated_generators(x2, -1) == []
    assert truncated_generators(x2, 1) == []
    two = SystemProfile.parse(["x1^2", "x2^2"])
    assert set(truncated_generators(two, 2)) == {poly_parse("x1^2", 2), poly_parse("x2^2", 2)}


def test_membership_examples():
    x2 = SystemProfile.parse(["x1^2"])
    w = membership(poly_parse("x1^3", 1), x2, 3)
    assert [str(m) for m in w.multipliers()] == ["x1"]
    for d in (1, 2, 5):
        assert membership(poly_parse("x1", 1), x2, d) is None
    two = SystemProfile.parse(["x1^2", "x2^2"])
    F = poly_parse("x1^2*x2 + x2^3", 2)
    w = membership(F, two, 3)
    assert [str(m) for m in w.multipliers()] == ["x2", "x2"]
    assert w.reconstruct() == F
    assert w.respects([1, 1])


def test_membership_degree_precondition():
    with pytest.raises(PreconditionError):
        membership(poly_parse("x1^3", 1), SystemProfile.parse(["x1^2"]), 2)


def test_membership_zero():
    w = membership(Poly.zero(1), SystemProfile.parse(["x1^2"]), -1)
    assert w.reconstruct().is_zero()


def test_basis_examples():
    b = root_functional_basis(SystemProfile.parse(["x1^2 - 1"]), 1)
    assert b.dimension == 2
    b = root_functional_basis(SystemProfile.parse(["x1^2", "x2^2"]), 2)
    assert b.dimension == 4
    supports = sorted(tuple(L.coeffs) for L in b.basis)
    assert supports == sorted([((0, 0),), ((1, 0),), ((0, 1),), ((1, 1),)])
    assert all(set(L.coeffs.values()) == {1} for L in b.basis)


def test_basis_contains_evaluations():
    f = SystemProfile.parse(["x1^2 - 1"])
    b = root_functional_basis(f, 2)
    assert b.dimension == 2
    # kernel of the single row (-1, 0, 1): v0 = v2
    rows = [{0: Fraction(-1), 2: Fraction(1)}]
    assert 3 - oracles.rank(rows, 3) == 2
    for lam in (1, -1):
        L = eval_functional([lam], 2)
        assert annihilates(L, f, 2)
        # coordinates in the basis are the values on the free columns x and x^2
        assert functional_lincomb([(L((1,)), b.basis[0]), (L((2,)), b.basis[1])]) == L


def test_basis_degree_zero():
    b = root_functional_basis(SystemProfile.parse(["x1*x2 - 1", "x1 + x2"]), 0)
    assert b.dimension == 1
    assert b.basis[0].coeffs == {(0, 0): 1}


def test_basis_reduced_echelon_layout():
    b = root_functional_basis(SystemProfile.parse(["x1^2 - 1"]), 2)
    assert [L.coeffs for L in b.basis] == [{(1,): 1}, {(0,): 1, (2,): 1}]


def test_column_cap():
    with pytest.raises(ColumnCapExceeded):
        root_functional_basis(SystemProfile.parse(["x1", "x2", "x3"]), 30, cap=100)
    with pytest.raises(PreconditionError):
        root_functional_basis(SystemProfile.parse(["x1"]), -1)


def test_annihilates_examples():
    f = SystemProfile.parse(["x1^2 - 1"])
    assert annihilates(Functional.zero(1, 3), f, 3)
    assert annihilates(eval_functional([1], 2), f, 2)
    dual = Functional.dual_monomial(1, 2, (2,))
    assert not annihilates(dual, SystemProfile.parse(["x1^2"]), 2)
    label, g, v = first_violation(dual, SystemProfile.parse(["x1^2"]), 2)
    assert label == (0, (0,)) and v == 1
    with pytest.raises(PreconditionError):
        annihilates(dual, f, 3)


@settings(max_examples=40, deadline=None)
@given(systems(), st.integers(0, 4))
def test_basis_annihilates_and_nullity(f, D):
    b = root_functional_basis(f, D)
    mac = macaulay_matrix(f, D)
    cols = comb(f.nvars + D, f.nvars)
    assert len(mac.columns) == cols
    assert b.rank == oracles.rank(mac.rows, cols)
    assert b.dimension + b.rank == cols
    for L in b.basis:
        assert annihilates(L, f, D)


@settings(max_examples=40, deadline=None)
@given(systems(), st.integers(0, 4), st.data())
def test_membership_reconstructs(f, d, data):
    gens = truncated_generators(f, d)
    weights = data.draw(st.lists(rationals, min_size=len(gens), max_size=len(gens)))
    F = Poly.zero(f.nvars)
    for w, g in zip(weights, gens):
        F = F + g.scale(w)
    w = membership(F, f, d)
    assert w is not None
    assert w.reconstruct() == F
    assert w.respects([d - k for k in f.degrees])


@settings(max_examples=40, deadline=None)
@given(systems(nmax=2), st.integers(0, 3), st.data())
def test_membership_iff_row_space(f, d, data):
    F = data.draw(polys(f.nvars, max_degree=d, max_terms=3))
    mac = macaulay_matrix(f, d)
    index = {e: j for j, e in enumerate(mac.columns)}
    row = {index[e]: c for e, c in F.terms.items()}
    in_span = oracles.rank(mac.rows + [row], len(mac.columns)) == oracles.rank(mac.rows, len(mac.columns))
    assert (membership(F, f, d) is not None) == in_span


@settings(max_examples=30, deadline=None)
@given(systems(nmax=2), st.integers(0, 3))
def test_truncation_monotone(f, d):
    for g in truncated_generators(f, d):
        assert membership(g, f, d + 1) is not None
