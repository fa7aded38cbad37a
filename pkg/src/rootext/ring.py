"""Sparse multivariate polynomials with exact rational coefficients.

Two concrete types share one implementation:

* ``Poly`` lives in ``x1..xn``;
* ``PolyXY`` lives in the doubled set ``x1..xn, y1..yn`` and stores
  exponents as a single tuple of length ``2n`` (x-block first).

Coefficients are ``fractions.Fraction``; anything accepted by the
``Fraction`` constructor (ints, Fractions, "p/q" strings) is coerced.
Values are immutable by convention: no public method mutates ``terms``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

Exponent = Tuple[int, ...]

MINUS_INFINITY = -math.inf
"""Degree of the zero polynomial; compares below every integer."""


def coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(value)


def grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    """Sort key for graded lexicographic order (degree first, then lex)."""
    return sum(exp), exp


def monomials_upto(nvars: int, degree) -> List[Exponent]:
    """All exponents in ``nvars`` variables of total degree <= ``degree``,
    ascending in graded-lex order."""
    result: List[Exponent] = []
    if degree < 0:
        return result
    for total in range(int(degree) + 1):
        layer = []
        for combo in combinations_with_replacement(range(nvars), total):
            exp = [0] * nvars
            for i in combo:
                exp[i] += 1
            layer.append(tuple(exp))
        layer.sort()
        result.extend(layer)
    return result


def count_monomials(nvars: int, degree) -> int:
    """C(nvars + degree, nvars), or 0 when degree < 0."""
    if degree < 0:
        return 0
    return math.comb(nvars + int(degree), nvars)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(i + j for i, j in zip(a, b))


class _Sparse:
    __slots__ = ("nvars", "terms")

    # number of exponent slots per variable block
    _blocks = 1

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        self.nvars = nvars
        width = nvars * self._blocks
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for exp, c in dict(terms).items():
                exp = tuple(exp)
                if len(exp) != width or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent {exp} for {width} slots")
                c = coerce(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exponent, Fraction]):
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- construction helpers -------------------------------------------
    @classmethod
    def zero(cls, nvars: int):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c):
        c = coerce(c)
        width = nvars * cls._blocks
        return cls._raw(nvars, {(0,) * width: c} if c else {})

    @classmethod
    def monomial(cls, nvars: int, exp: Sequence[int], c=1):
        return cls(nvars, {tuple(exp): c})

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def degree(self):
        """Total degree, ``MINUS_INFINITY`` for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def sorted_terms(self, descending: bool = True) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=descending)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    # -- ring operations --------------------------------------------------
    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} != {other.nvars}")

    def _lift(self, other):
        if isinstance(other, _Sparse):
            self._check(other)
            return other
        return type(self).constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return self._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = coerce(c)
        if not c:
            return self.zero(self.nvars)
        return self._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _Sparse):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw(self.nvars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: Sequence[int], c=1):
        """Multiply by the monomial ``c * z^exp``."""
        c = coerce(c)
        exp = tuple(exp)
        if not c:
            return self.zero(self.nvars)
        return self._raw(self.nvars, {_add_exp(e, exp): v * c for e, v in self.terms.items()})

    def exact_div(self, other):
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if
        ``other`` does not divide ``self``."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.leading_term()
        rem = self
        quot: Dict[Exponent, Fraction] = {}
        while rem.terms:
            e, c = rem.leading_term()
            diff = tuple(a - b for a, b in zip(e, lead_e))
            if any(d < 0 for d in diff):
                raise ArithmeticError("inexact polynomial division")
            q = c / lead_c
            quot[diff] = q
            rem = rem - other.shift(diff, q)
        return self._raw(self.nvars, quot)

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, _Sparse):
            return type(other) is type(self) and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == (self.constant(self.nvars, other).terms)
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {str(self)!r})"

    def __str__(self):
        return format_terms(self.sorted_terms(), self._names())

    def _names(self) -> List[str]:
        return [f"x{i + 1}" for i in range(self.nvars)]


class Poly(_Sparse):
    """Polynomial in ``x1..xn``."""

    __slots__ = ()

    @classmethod
    def var(cls, nvars: int, k: int):
        """The variable ``x_{k+1}`` (0-based ``k``)."""
        exp = [0] * nvars
        exp[k] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    def __call__(self, *point):
        return poly_eval(self, point)


class PolyXY(_Sparse):
    """Polynomial in ``x1..xn, y1..yn``."""

    __slots__ = ()
    _blocks = 2

    @classmethod
    def xvar(cls, nvars: int, k: int):
        exp = [0] * (2 * nvars)
        exp[k] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    @classmethod
    def yvar(cls, nvars: int, k: int):
        exp = [0] * (2 * nvars)
        exp[nvars + k] = 1
        return cls._raw(nvars, {tuple(exp): Fraction(1)})

    def split(self, exp: Exponent) -> Tuple[Exponent, Exponent]:
        return exp[: self.nvars], exp[self.nvars:]

    def x_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e[: self.nvars]) for e in self.terms)

    def y_degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e[self.nvars:]) for e in self.terms)

    def _names(self) -> List[str]:
        n = self.nvars
        return [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)]


# -- free functions mirroring the operation list -----------------------------

def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(a: Poly, c) -> Poly:
    return a.scale(c)


def poly_eval(p: _Sparse, point: Sequence) -> Fraction:
    """Substitute ``point`` (length ``n``, or ``2n`` for ``PolyXY``)."""
    width = p.nvars * p._blocks
    if len(point) != width:
        raise ValueError(f"expected {width} coordinates, got {len(point)}")
    point = [coerce(v) for v in point]
    total = Fraction(0)
    for exp, c in p.terms.items():
        term = c
        for v, e in zip(point, exp):
            if e:
                term *= v ** e
        total += term
    return total


def embed_x(p: Poly) -> PolyXY:
    pad = (0,) * p.nvars
    return PolyXY._raw(p.nvars, {e + pad: c for e, c in p.terms.items()})


def embed_y(p: Poly) -> PolyXY:
    pad = (0,) * p.nvars
    return PolyXY._raw(p.nvars, {pad + e: c for e, c in p.terms.items()})


def subst_swap_xy(q: PolyXY) -> PolyXY:
    """``Q(x, y) -> Q(y, x)``."""
    n = q.nvars
    return PolyXY._raw(n, {e[n:] + e[:n]: c for e, c in q.terms.items()})


def x_part(q: PolyXY) -> Poly:
    """Restriction to the x-block; fails if ``q`` depends on y."""
    n = q.nvars
    out = {}
    for e, c in q.terms.items():
        if any(e[n:]):
            raise ValueError("polynomial depends on y")
        out[e[:n]] = c
    return Poly._raw(n, out)


# -- printing ------------------------------------------------------------------

def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Iterable[Tuple[Exponent, Fraction]], names: Sequence[str]) -> str:
    parts: List[str] = []
    for exp, c in terms:
        factors = []
        for name, e in zip(names, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def poly_print(p: _Sparse) -> str:
    return str(p)


# -- parsing -------------------------------------------------------------------

class PolyParseError(ValueError):
    """Raised for malformed polynomial text; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class VariableIndexError(PolyParseError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[xy])(?P<idx>\d+)|(?P<op>[-+*^]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolyParseError(f"unexpected character {text[start]!r}", start)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), start))
        elif m.group("var") is not None:
            tokens.append(("var", (m.group("var"), int(m.group("idx"))), start))
        else:
            tokens.append(("op", m.group("op"), start))
        pos = m.end()
    return tokens


def _parse(text: str, nvars: int, allow_y: bool) -> Dict[Exponent, Fraction]:
    tokens = _tokenize(text)
    width = 2 * nvars if allow_y else nvars
    out: Dict[Exponent, Fraction] = {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else None

    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    first = True
    while i < len(tokens):
        sign = 1
        tok = peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            i += 1
        elif not first:
            raise PolyParseError("expected '+' or '-'", tok[2])
        first = False
        coeff = Fraction(sign)
        exp = [0] * width
        expect_factor = True
        seen_factor = False
        while True:
            tok = peek()
            if tok is None:
                if expect_factor:
                    raise PolyParseError("unexpected end of input", len(text))
                break
            kind, val, p = tok
            if expect_factor:
                if kind == "num":
                    coeff *= Fraction(val)
                    i += 1
                elif kind == "var":
                    block, k = val
                    if block == "y" and not allow_y:
                        raise PolyParseError("y variables are not allowed here", p)
                    if not 1 <= k <= nvars:
                        raise VariableIndexError(f"variable {block}{k} outside 1..{nvars}", p)
                    i += 1
                    power = 1
                    nxt = peek()
                    if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
                        i += 1
                        nxt = peek()
                        if nxt is None or nxt[0] != "num" or "/" in nxt[1]:
                            raise PolyParseError("expected integer exponent",
                                                 nxt[2] if nxt else len(text))
                        power = int(nxt[1])
                        if power < 1:
                            raise PolyParseError("exponent must be >= 1", nxt[2])
                        i += 1
                    slot = (k - 1) + (nvars if block == "y" else 0)
                    exp[slot] += power
                else:
                    raise PolyParseError(f"unexpected {val!r}", p)
                expect_factor = False
                seen_factor = True
            else:
                if kind == "op" and val == "*":
                    i += 1
                    expect_factor = True
                elif kind == "op" and val in "+-":
                    break
                else:
                    raise PolyParseError(f"unexpected {val!r}", p)
        if not seen_factor:
            raise PolyParseError("empty term", len(text))
        key = tuple(exp)
        out[key] = out.get(key, 0) + coeff
    return {e: c for e, c in out.items() if c}


def poly_parse(text: str, nvars: int) -> Poly:
    """Parse text like ``3/2*x1^2*x2 - x2 + 1``."""
    return Poly._raw(nvars, _parse(text, nvars, allow_y=False))


def polyxy_parse(text: str, nvars: int) -> PolyXY:
    """Parse a polynomial in ``x1..xn, y1..yn``."""
    return PolyXY._raw(nvars, _parse(text, nvars, allow_y=True))


# -- square systems ------------------------------------------------------------

class SystemProfile:
    """A square system ``f_1..f_n`` in ``n`` variables.

    Constant equations are rejected: they make ``delta_f`` meaningless and
    collapse every truncated ideal piece to the whole truncated space.
    """

    __slots__ = ("polys", "nvars", "delta_f", "degrees")

    def __init__(self, polys: Sequence[Poly]):
        polys = tuple(polys)
        if not polys:
            raise ValueError("empty system")
        n = polys[0].nvars
        if len(polys) != n:
            raise ValueError(f"system is not square: {len(polys)} equations in {n} variables")
        for i, p in enumerate(polys):
            if not isinstance(p, Poly) or p.nvars != n:
                raise ValueError(f"equation {i + 1} is not a Poly in {n} variables")
            if p.degree() < 1:
                raise ValueError(f"equation {i + 1} has degree < 1")
        self.polys = polys
        self.nvars = n
        self.degrees = tuple(int(p.degree()) for p in polys)
        self.delta_f = sum(d - 1 for d in self.degrees)

    @classmethod
    def parse(cls, lines: Iterable[str]) -> "SystemProfile":
        lines = [ln for ln in (l.strip() for l in lines) if ln and not ln.startswith("#")]
        return cls([poly_parse(ln, len(lines)) for ln in lines])

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return isinstance(other, SystemProfile) and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def to_lines(self) -> List[str]:
        return [str(p) for p in self.polys]

    def __repr__(self):
        return f"SystemProfile({self.to_lines()!r})"
