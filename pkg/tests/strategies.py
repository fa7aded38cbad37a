from fractions import Fraction

from hypothesis import strategies as st

from rootext.functional import Functional
from rootext.ring import Poly, PolyXY, monomials_upto

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))
nonzero_rationals = rationals.filter(bool)


@st.composite
def polys(draw, n=None, max_degree=3, max_terms=5):
    if n is None:
        n = draw(st.integers(1, 3))
    deg = draw(st.integers(0, max_degree))
    monos = monomials_upto(n, deg)
    terms = draw(st.dictionaries(st.sampled_from(monos), rationals, max_size=max_terms))
    return Poly(n, terms)


@st.composite
def poly_pairs(draw, max_degree=3, count=2):
    n = draw(st.integers(1, 3))
    return tuple(draw(polys(n, max_degree)) for _ in range(count))


@st.composite
def polyxys(draw, n, max_degree=3, max_terms=5):
    monos = monomials_upto(2 * n, max_degree)
    terms = draw(st.dictionaries(st.sampled_from(monos), rationals, max_size=max_terms))
    return PolyXY(n, terms)


@st.composite
def functionals(draw, n, bound):
    monos = monomials_upto(n, bound)
    table = draw(st.dictionaries(st.sampled_from(monos), rationals, max_size=len(monos)))
    return Functional(n, bound, table)
