"""Rank-2 refinement of curve valuations: Z x Q values in lexicographic order.

A valuation with nontrivial support sends the support generator to infinity;
its rank-2 refinement counts the generator multiplicity first and evaluates
the residual factor second.  Here the representable cases are the level-0
curve types, whose support generator is a linear form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from .poly import (
    BivarPoly,
    IDENTITY_FRAME,
    LinearFrame,
    divide_out_linear,
    frame_apply,
)
from .rationals import INF, ExtRat, is_inf
from .valuation import (
    Curve,
    QuasiMonomialVal,
    UnsupportedDeepCurveError,
    _canonicalize_raw,
    _require_normalized,
    evaluate,
)

Rank2Value = Tuple[int, Fraction]


@dataclass(frozen=True)
class Rank2Val:
    """Monomial Z x Q valuation in the coordinates named by the frame rows."""

    wx: Rank2Value
    wy: Rank2Value
    frame: LinearFrame = field(default=IDENTITY_FRAME)

    def __post_init__(self):
        object.__setattr__(self, "wx", (int(self.wx[0]), Fraction(self.wx[1])))
        object.__setattr__(self, "wy", (int(self.wy[0]), Fraction(self.wy[1])))

    def __call__(self, phi: BivarPoly):
        return rank2_eval(self, phi)


@dataclass(frozen=True)
class KrullSameRank1:
    valuation: QuasiMonomialVal


@dataclass(frozen=True)
class KrullRank2:
    val: Rank2Val
    support_generator: BivarPoly


KrullResult = Union[KrullSameRank1, KrullRank2]


def krull_lift(nu: QuasiMonomialVal) -> KrullResult:
    """Refine nu to a Krull valuation.

    Trivial support (finite values everywhere) returns the valuation itself.
    A level-0 curve valuation maps psi = gen^r * psi' to (r, nu(psi')); the
    weights of x and y under that rule determine the rank-2 valuation.
    """
    _require_normalized(nu, "krull_lift")
    form = _canonicalize_raw(nu)
    if not isinstance(form.terminal, Curve):
        return KrullSameRank1(nu)
    if form.steps:
        raise UnsupportedDeepCurveError(
            "support generator is a strict transform, not a linear form"
        )
    gen = form.terminal.direction.form()
    if form.terminal.direction.is_inf:
        frame = IDENTITY_FRAME  # gen = x is already the first coordinate
    else:
        frame = LinearFrame(
            ((Fraction(1), Fraction(0)), tuple(map(Fraction, gen_pair(gen))))
        )

    def lift_value(phi: BivarPoly) -> Rank2Value:
        r, psi = divide_out_linear(phi, gen)
        residual = evaluate(nu, psi)
        assert not is_inf(residual)
        return (r, residual)

    # weights belong to the frame coordinates; the generator's row gets (1, 0)
    rho = Rank2Val(lift_value(frame.row_form(0)), lift_value(frame.row_form(1)), frame)
    assert rank2_eval(rho, _X) == lift_value(_X)
    assert rank2_eval(rho, _Y) == lift_value(_Y)
    return KrullRank2(rho, gen)


_X = BivarPoly.var_x()
_Y = BivarPoly.var_y()


def gen_pair(gen: BivarPoly) -> Tuple[int, int]:
    terms = gen.terms
    a = terms.get((1, 0), Fraction(0))
    b = terms.get((0, 1), Fraction(0))
    return (int(a), int(b))


def rank2_eval(rho: Rank2Val, phi: BivarPoly) -> Union[Rank2Value, ExtRat]:
    """Lex-min over the support of componentwise r*wx + s*wy; inf on zero."""
    psi = frame_apply(phi, rho.frame)
    if psi.is_zero():
        return INF
    (x0, x1), (y0, y1) = rho.wx, rho.wy
    return min((r * x0 + s * y0, r * x1 + s * y1) for r, s in psi.terms)


def rank1_section(rho: Rank2Val) -> Optional[QuasiMonomialVal]:
    """Project to the second coordinate where the first vanishes, else inf.

    Returns None when the projection is not a valuation on the ring (both
    coordinates would be sent to infinity).
    """

    def section_weight(w: Rank2Value) -> ExtRat:
        return w[1] if w[0] == 0 else INF

    try:
        return QuasiMonomialVal(
            (), rho.frame, (section_weight(rho.wx), section_weight(rho.wy))
        )
    except ValueError:
        return None
