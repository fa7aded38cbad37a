import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootext.errors import DegreeOverflowError
from rootext.functional import (Functional, apply_in_y, eval_functional, functional_apply,
                                functional_lincomb)
from rootext.ring import Poly, embed_x, embed_y, poly_eval, poly_parse, polyxy_parse

from .strategies import functionals, polys, polyxys, rationals


def test_apply_examples():
    one = Functional.dual_monomial(1, 2, (0,))
    assert functional_apply(one, poly_parse("x1^2 - 1", 1)) == -1
    assert functional_apply(eval_functional([7], 3), Poly.zero(1)) == 0
    assert functional_apply(eval_functional([1], 2), poly_parse("x1^2 - 1", 1)) == 0


def test_apply_degree_overflow():
    with pytest.raises(DegreeOverflowError):
        functional_apply(eval_functional([1], 1), poly_parse("x1^2", 1))


def test_eval_functional_tables():
    assert eval_functional([0, 0], 3).coeffs == {(0, 0): 1}
    assert eval_functional([1], 2).dense() == [1, 1, 1]
    assert eval_functional([2], 2).dense() == [1, 2, 4]


def test_apply_in_y_examples():
    L = eval_functional([1], 1)
    assert apply_in_y(L, polyxy_parse("x1 + y1", 1)) == poly_parse("x1 + 1", 1)
    L3 = Functional(1, 2, {(0,): 3, (1,): 5})
    assert apply_in_y(L3, polyxy_parse("2*x1^2 - x1", 1)) == poly_parse("6*x1^2 - 3*x1", 1)
    dual = Functional.dual_monomial(1, 2, (2,))
    assert apply_in_y(dual, polyxy_parse("x1*y1^2", 1)) == poly_parse("x1", 1)
    with pytest.raises(DegreeOverflowError):
        apply_in_y(dual, polyxy_parse("y1^3", 1))


def test_lincomb_examples():
    L = eval_functional([3], 2)
    assert functional_lincomb([(1, L), (-1, L)]).is_zero()
    dx = Functional.dual_monomial(1, 2, (1,))
    assert functional_lincomb([(2, dx)]).coeffs == {(1,): 2}
    # powers of 1 minus powers of 0 on degree <= 1
    diff = functional_lincomb([(1, eval_functional([1], 1)), (-1, eval_functional([0], 1))])
    assert diff == Functional.dual_monomial(1, 1, (1,))
    with pytest.raises(ValueError):
        functional_lincomb([])


def test_lincomb_takes_smallest_bound():
    L = functional_lincomb([(1, eval_functional([2], 3)), (1, eval_functional([1], 1))])
    assert L.bound == 1
    assert L.coeffs == {(0,): 2, (1,): 3}


def test_compare_flags_partial():
    a = eval_functional([2], 3)
    assert a.compare(eval_functional([2], 1)) == (True, True)
    assert a.compare(a) == (True, False)
    assert a.compare(eval_functional([1], 3)) == (False, False)


def test_restrict_and_extend():
    L = eval_functional([2], 2)
    assert L.extended(4).restrict(2) == L
    assert L.extended(3, {(3,): 8}) == eval_functional([2], 3)
    with pytest.raises(ValueError):
        L.extended(3, {(1,): 5})
    with pytest.raises(ValueError):
        Functional(1, 1, {(2,): 1})


def test_json_layout():
    L = Functional(2, 2, {(1, 0): Fraction(3, 2), (0, 0): -1})
    data = L.to_json()
    assert data == {"nvars": 2, "bound": 2,
                    "coeffs": [{"exp": [0, 0], "val": "-1"}, {"exp": [1, 0], "val": "3/2"}]}
    assert Functional.from_json(json.dumps(data)) == L


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    polys(n, max_degree=3), st.lists(rationals, min_size=n, max_size=n))))
def test_eval_functional_agrees_with_substitution(args):
    F, point = args
    assert functional_apply(eval_functional(point, 3), F) == poly_eval(F, point)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    functionals(n, 3), polys(n, max_degree=3), polys(n, max_degree=2))))
def test_apply_in_y_separable(args):
    L, F, G = args
    assert apply_in_y(L, embed_y(F) * embed_x(G)) == G * functional_apply(L, F)


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(
    functionals(n, 3), functionals(n, 3), polyxys(n, 3), polyxys(n, 3), rationals)))
def test_apply_in_y_bilinear(args):
    L1, L2, Q1, Q2, c = args
    assert apply_in_y(L1, Q1 + Q2.scale(c)) == apply_in_y(L1, Q1) + apply_in_y(L1, Q2) * c
    comb = functional_lincomb([(1, L1), (c, L2)])
    assert apply_in_y(comb, Q1) == apply_in_y(L1, Q1) + apply_in_y(L2, Q1) * c


@given(st.integers(1, 3).flatmap(lambda n: functionals(n, 3)))
def test_json_roundtrip(L):
    assert Functional.from_json(json.dumps(L.to_json())) == L
