from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootext.ring import (MINUS_INFINITY, Poly, PolyParseError, PolyXY, SystemProfile,
                          VariableIndexError, count_monomials, embed_x, embed_y,
                          monomials_upto, poly_eval, poly_parse, polyxy_parse, subst_swap_xy)

from .strategies import polys, poly_pairs, polyxys, rationals


def test_parse_univariate():
    p = poly_parse("x1^2 - 1", 1)
    assert p.terms == {(2,): 1, (0,): -1}


def test_parse_zero():
    p = poly_parse("0", 2)
    assert p.is_zero()
    assert p.degree() == MINUS_INFINITY
    assert p.degree() < -10**9


def test_parse_rational_coefficient():
    p = poly_parse("3/2*x1*x2 + x2^3", 2)
    assert len(p) == 2
    assert p.degree() == 3
    assert p.coeff((1, 1)) == Fraction(3, 2)


@pytest.mark.parametrize("text, pos", [
    ("x1 +", 4),
    ("x1 ** 2", 4),
    ("2 x1", 2),
    ("x1^", 3),
    ("x1 & 2", 3),
    ("", 0),
])
def test_parse_syntax_errors(text, pos):
    with pytest.raises(PolyParseError) as err:
        poly_parse(text, 2)
    assert err.value.pos == pos


def test_parse_variable_out_of_range():
    with pytest.raises(VariableIndexError):
        poly_parse("x3 + 1", 2)
    with pytest.raises(VariableIndexError):
        poly_parse("x0", 2)


def test_parse_rejects_y_in_plain_poly():
    with pytest.raises(PolyParseError):
        poly_parse("y1", 1)


def test_parse_whitespace_and_repeats():
    assert poly_parse(" -x1 * x1+  2 ", 1) == poly_parse("2 - x1^2", 1)


def test_print_canonical():
    assert str(poly_parse("x2 + 1 + 3/2*x2*x1^2 - x2", 2)) == "3/2*x1^2*x2 + 1"
    assert str(Poly.zero(3)) == "0"
    assert str(poly_parse("-x1 + x2^2", 2)) == "x2^2 - x1"


def test_difference_of_squares():
    x = Poly.var(1, 0)
    assert (x + 1) * (x - 1) == poly_parse("x1^2 - 1", 1)


def test_eval_examples():
    assert poly_eval(poly_parse("x1^2 - 1", 1), [1]) == 0
    assert poly_eval(Poly.zero(2), [5, 7]) == 0
    assert poly_eval(poly_parse("x1*x2", 2), [2, Fraction(3, 2)]) == 3
    with pytest.raises(ValueError):
        poly_eval(Poly.zero(2), [1])


def test_nvars_mismatch():
    with pytest.raises(ValueError):
        Poly.var(1, 0) + Poly.var(2, 0)
    with pytest.raises(TypeError):
        Poly.var(1, 0) + PolyXY.xvar(1, 0)


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly(1, {(1,): 0.5})


def test_embed_and_swap():
    x = poly_parse("x1", 1)
    assert embed_x(x) == polyxy_parse("x1", 1)
    assert embed_y(x) == polyxy_parse("y1", 1)
    assert subst_swap_xy(polyxy_parse("x1 - y1", 1)) == polyxy_parse("y1 - x1", 1)


def test_polyxy_degrees():
    q = polyxy_parse("x1^2*y2 + y1^3*y2 + x2", 2)
    assert q.degree() == 4
    assert q.x_degree() == 2
    assert q.y_degree() == 4


def test_monomial_enumeration():
    assert monomials_upto(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert monomials_upto(3, -1) == []
    for n in range(1, 4):
        for d in range(5):
            assert len(monomials_upto(n, d)) == count_monomials(n, d)


def test_exact_div():
    a = poly_parse("x1^3 - x2^3", 2)
    b = poly_parse("x1 - x2", 2)
    assert a.exact_div(b) == poly_parse("x1^2 + x1*x2 + x2^2", 2)
    with pytest.raises(ArithmeticError):
        poly_parse("x1^2 + 1", 2).exact_div(b)


def test_system_profile():
    f = SystemProfile.parse(["x1^2 - 1", "x2^3 + x1"])
    assert f.delta_f == 3
    with pytest.raises(ValueError):
        SystemProfile([poly_parse("x1", 2)])
    with pytest.raises(ValueError):
        SystemProfile.parse(["x1", "3"])


@given(poly_pairs(count=3))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + (-1) * a == Poly.zero(a.nvars)


@given(poly_pairs())
def test_degree_rules(pair):
    a, b = pair
    assert (a + b).degree() <= max(a.degree(), b.degree())
    if a.degree() != b.degree():
        assert (a + b).degree() == max(a.degree(), b.degree())
    if a and b:
        assert (a * b).degree() == a.degree() + b.degree()


@given(polys())
def test_print_parse_roundtrip(p):
    assert poly_parse(str(p), p.nvars) == p


@given(st.integers(1, 3).flatmap(lambda n: polyxys(n)))
def test_swap_involution(q):
    assert subst_swap_xy(subst_swap_xy(q)) == q
    assert polyxy_parse(str(q), q.nvars) == q


@given(poly_pairs(), st.lists(rationals, min_size=3, max_size=3))
def test_eval_is_ring_homomorphism(pair, point):
    a, b = pair
    pt = point[: a.nvars]
    assert poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt)
    assert poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt)
