"""Exact rational scalars extended with a formal +infinity.

Finite values are plain ``fractions.Fraction`` objects; the shared ``INF``
sentinel adjoins +infinity.  ``INF`` compares strictly greater than every
Fraction and absorbs addition.  Multiplication is deliberately kept off the
operator protocol: order-weight arithmetic needs the convention
``0 * inf == 0``, which lives in :func:`scale` so that accidental float-style
arithmetic fails loudly instead of silently picking a convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class Infinity:
    """Formal +infinity.  A single shared instance ``INF`` exists."""

    __slots__ = ()
    _instance: "Infinity | None" = None

    def __new__(cls) -> "Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("valtree.INF")

    # INF is the top of the order.
    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "Infinity":
        return self

    __radd__ = __add__

    def __sub__(self, other: object) -> "Infinity":
        if other is self:
            raise ArithmeticError("inf - inf is undefined")
        return self

    def __repr__(self) -> str:
        return "inf"


INF = Infinity()

ExtRat = Union[Fraction, Infinity]

ZERO = Fraction(0)
ONE = Fraction(1)


def is_inf(value: ExtRat) -> bool:
    return value is INF


def scale(factor: Union[int, Fraction], value: ExtRat) -> ExtRat:
    """``factor * value`` with the convention ``0 * inf == 0``.

    Negative factors never make sense for order weights and are rejected.
    """
    if factor < 0:
        raise ValueError("scale factor must be nonnegative")
    if factor == 0:
        return ZERO
    if value is INF:
        return INF
    return Fraction(factor) * value


def parse_rat(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (decimal digits, optional leading -)."""
    return Fraction(text.strip())


def format_rat(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_extrat(text: str) -> ExtRat:
    stripped = text.strip().lower()
    if stripped == "inf":
        return INF
    return parse_rat(text)


def format_extrat(value: ExtRat) -> str:
    if value is INF:
        return "inf"
    return format_rat(value)
