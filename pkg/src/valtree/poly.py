"""Sparse bivariate polynomials over Q with substitution and weighted orders.

Polynomials are immutable mappings from exponent pairs ``(r, s)`` (for
``x^r * y^s``) to nonzero ``Fraction`` coefficients.  They are the ring
elements every valuation in this package is evaluated on, so everything here
is exact: no floats, no approximate cancellation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Tuple, Union

from .rationals import INF, ExtRat, ONE, ZERO, is_inf, scale

Exponents = Tuple[int, int]


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotLinearError(ValueError):
    """Raised when a homogeneous degree-1 form was required."""


class SingularFrameError(ValueError):
    """Raised when a coordinate frame has determinant zero."""


class BothWeightsInfiniteError(ValueError):
    """Raised when both weights of a weighted order are infinite."""


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class BivarPoly:
    """A polynomial in x and y with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Union[Fraction, int]] = ()):
        clean = {}
        for (r, s), c in dict(terms).items():
            if r < 0 or s < 0:
                raise ValueError("negative exponent")
            c = _coerce(c)
            if c != 0:
                clean[(int(r), int(s))] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("BivarPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls({})

    @classmethod
    def constant(cls, c) -> "BivarPoly":
        return cls({(0, 0): _coerce(c)})

    @classmethod
    def monomial(cls, r: int, s: int, c=1) -> "BivarPoly":
        return cls({(r, s): _coerce(c)})

    @classmethod
    def var_x(cls) -> "BivarPoly":
        return cls({(1, 0): ONE})

    @classmethod
    def var_y(cls) -> "BivarPoly":
        return cls({(0, 1): ONE})

    @classmethod
    def linear_form(cls, a, b) -> "BivarPoly":
        """The form a*x + b*y."""
        return cls({(1, 0): _coerce(a), (0, 1): _coerce(b)})

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            k = _coerce(other)
            return BivarPoly({e: c * k for e, c in self.terms.items()})
        out: dict = {}
        for (r1, s1), c1 in self.terms.items():
            for (r2, s2), c2 in other.terms.items():
                e = (r1 + r2, s1 + s2)
                out[e] = out.get(e, ZERO) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivarPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BivarPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, ex: "BivarPoly", ey: "BivarPoly") -> "BivarPoly":
        """Evaluate self at (ex, ey), fully expanded with exact cancellation."""
        # cache powers of the images; exponents in a sparse poly repeat a lot
        xpow = {0: BivarPoly.constant(1)}
        ypow = {0: BivarPoly.constant(1)}

        def power(cache, base, n):
            while n not in cache:
                k = max(cache)
                cache[k + 1] = cache[k] * base
            return cache[n]

        total = BivarPoly.zero()
        for (r, s), c in sorted(self.terms.items()):
            total = total + power(xpow, ex, r) * power(ypow, ey, s) * c
        return total

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(r + s for r, s in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0, 0), ZERO)

    # -- printing ----------------------------------------------------------

    def _ordered(self) -> Iterator[Tuple[Exponents, Fraction]]:
        # descending graded-lex with x > y
        for e in sorted(self.terms, key=lambda e: (-(e[0] + e[1]), -e[0])):
            yield e, self.terms[e]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (r, s), c in self._ordered():
            factors = []
            if abs(c) != 1 or (r == 0 and s == 0):
                factors.append(str(abs(c)))
            if r:
                factors.append("x" if r == 1 else f"x^{r}")
            if s:
                factors.append("y" if s == 1 else f"y^{s}")
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([xy])|([+\-*^()])|(\S))")


def poly_parse(text: str) -> BivarPoly:
    """Parse `c`, `c*x^a*y^b` style terms joined by + and -."""
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(4):
            raise PolyParseError(f"unexpected character {m.group(4)!r}", m.start(4))
        kind = "num" if m.group(1) else ("var" if m.group(2) else "op")
        tokens.append((kind, m.group(0).strip(), m.start()))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", "", len(text))

    def term_sign() -> int:
        nonlocal pos
        sign = 1
        while peek()[0] == "op" and peek()[1] in "+-":
            if peek()[1] == "-":
                sign = -sign
            pos += 1
        return sign

    def factor() -> BivarPoly:
        nonlocal pos
        kind, tok, at = peek()
        if kind == "num":
            pos += 1
            return BivarPoly.constant(Fraction(tok))
        if kind == "var":
            pos += 1
            exp = 1
            if peek()[1] == "^":
                pos += 1
                k, t, a = peek()
                if k == "op" and t == "-":
                    raise PolyParseError("negative exponent", a)
                if k != "num" or "/" in t:
                    raise PolyParseError("expected integer exponent", a)
                exp = int(t)
                pos += 1
            return BivarPoly.monomial(exp if tok == "x" else 0, exp if tok == "y" else 0)
        raise PolyParseError(f"expected a number or variable, got {tok!r}", at)

    def term() -> BivarPoly:
        nonlocal pos
        out = factor()
        while peek()[0] == "op" and peek()[1] == "*":
            pos += 1
            out = out * factor()
        return out

    if not tokens:
        raise PolyParseError("empty input", 0)
    total = BivarPoly.zero()
    while True:
        sign = term_sign()
        if peek()[0] == "end":
            raise PolyParseError("dangling sign or empty term", peek()[2])
        total = total + term() * sign
        kind, tok, at = peek()
        if kind == "end":
            return total
        if not (kind == "op" and tok in "+-"):
            raise PolyParseError(f"expected + or - between terms, got {tok!r}", at)


def poly_print(phi: BivarPoly) -> str:
    return str(phi)


def weighted_order(phi: BivarPoly, g1: ExtRat, g2: ExtRat) -> ExtRat:
    """min over the support of r*g1 + s*g2, with the convention 0*inf = 0."""
    if is_inf(g1) and is_inf(g2):
        raise BothWeightsInfiniteError("weights (inf, inf) admit no order")
    if not phi.terms:
        return INF
    best: ExtRat = INF
    for (r, s) in phi.terms:
        a = scale(r, g1)
        b = scale(s, g2)
        v = INF if (a is INF or b is INF) else a + b
        if v < best:
            best = v
    return best


def madic_order(phi: BivarPoly) -> ExtRat:
    """Order of vanishing at the origin: least total degree over the support."""
    if not phi.terms:
        return INF
    return Fraction(min(r + s for r, s in phi.terms))


def divide_out_linear(phi: BivarPoly, ell: BivarPoly) -> Tuple[int, BivarPoly]:
    """Split phi = ell^r * psi with ell not dividing psi; exact in every case."""
    if ell.is_zero() or set(ell.terms) - {(1, 0), (0, 1)}:
        raise NotLinearError(f"{ell} is not a nonzero homogeneous degree-1 form")
    if phi.is_zero():
        return 0, phi
    a = ell.terms.get((1, 0), ZERO)
    b = ell.terms.get((0, 1), ZERO)
    if b != 0:
        # rewrite phi in coordinates (x, u) with u = a*x + b*y, so y = (u - a*x)/b
        conv = phi.substitute(BivarPoly.var_x(), BivarPoly.linear_form(-a / b, 1 / b))
        r = min(s for _, s in conv.terms)
        shifted = BivarPoly({(i, j - r): c for (i, j), c in conv.terms.items()})
        psi = shifted.substitute(BivarPoly.var_x(), ell)
    else:
        r = min(i for i, _ in phi.terms)
        psi = BivarPoly({(i - r, j): c / a**r for (i, j), c in phi.terms.items()})
    assert ell**r * psi == phi
    return r, psi


@dataclass(frozen=True)
class LinearFrame:
    """An invertible change of coordinates; each row is the form of one target coordinate."""

    rows: Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]

    def __post_init__(self):
        rows = tuple(tuple(_coerce(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.det() == 0:
            raise SingularFrameError(f"rows {rows} are linearly dependent")

    @classmethod
    def identity(cls) -> "LinearFrame":
        return cls(((ONE, ZERO), (ZERO, ONE)))

    def det(self) -> Fraction:
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def is_identity(self) -> bool:
        return self.rows == ((ONE, ZERO), (ZERO, ONE))

    def inverse(self) -> "LinearFrame":
        (a, b), (c, d) = self.rows
        det = self.det()
        return LinearFrame(((d / det, -b / det), (-c / det, a / det)))

    def row_form(self, i: int) -> BivarPoly:
        return BivarPoly.linear_form(*self.rows[i])


IDENTITY_FRAME = LinearFrame.identity()


def frame_apply(phi: BivarPoly, frame: LinearFrame) -> BivarPoly:
    """Rewrite phi in the coordinates (u, v) = frame * (x, y)."""
    if frame.is_identity():
        return phi
    inv = frame.inverse()
    return phi.substitute(inv.row_form(0), inv.row_form(1))
