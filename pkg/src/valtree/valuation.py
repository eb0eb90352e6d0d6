"""Finite descriptions of valuations centered at the origin, and their algebra.

A valuation is described by a *dilatation program*: a list of blow-up centers,
an optional linear coordinate frame, and a final pair of monomial weights.
Evaluation pushes a polynomial through each center substitution, rewrites it
in the frame coordinates, and takes the weighted order of the result.

Conventions, fixed once and used everywhere:

* a finite center ``c`` performs the chart substitution ``y <- x*(y + c)``;
  the center at infinity performs ``x <- x*y``;
* the center ``c`` corresponds to the direction ``[-c : 1]`` of the projective
  line of linear forms ``a*x + b*y``, and the infinite center to ``[1 : 0]``;
  the conversion is its own inverse (negate the finite part);
* weights are strictly positive and at most one of them is infinite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from .poly import (
    BivarPoly,
    BothWeightsInfiniteError,
    IDENTITY_FRAME,
    LinearFrame,
    frame_apply,
    weighted_order,
)
from .rationals import INF, ExtRat, Infinity, ONE, ZERO, is_inf, scale


class EmptySetError(ValueError):
    """Raised when an infimum of no elements is requested."""


class PreconditionViolatedError(ValueError):
    """Raised when an operation's documented precondition does not hold."""


class InvalidPairError(ValueError):
    """Raised for residue-class pairs that are not unit-or-zero, or both zero."""


class DivisionUndefinedError(ValueError):
    """Raised when a membership test divides by an element of the support."""


class UnsupportedDeepCurveError(ValueError):
    """Raised for curve valuations whose support generator is not linear."""


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1(Q): a finite rational, or the point at infinity."""

    value: ExtRat

    def __post_init__(self):
        if not isinstance(self.value, Infinity):
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_inf(self) -> bool:
        return is_inf(self.value)

    def negate(self) -> "ProjPoint":
        """Center-to-direction conversion (an involution)."""
        return self if self.is_inf else ProjPoint(-self.value)

    def as_pair(self) -> Tuple[int, int]:
        """Primitive integer representative [a:b], with b >= 0."""
        if self.is_inf:
            return (1, 0)
        return (self.value.numerator, self.value.denominator)

    def form(self) -> BivarPoly:
        a, b = self.as_pair()
        return BivarPoly.linear_form(a, b)

    def __str__(self) -> str:
        return "inf" if self.is_inf else str(self.value)


INF_POINT = ProjPoint(INF)
ZERO_POINT = ProjPoint(0)


def direction_of_center(center: ProjPoint) -> ProjPoint:
    return center.negate()


def center_of_direction(direction: ProjPoint) -> ProjPoint:
    return direction.negate()


def direction_enumeration() -> Iterator[ProjPoint]:
    """[1:0], [0:1], [1:1], [1:-1], [1:2], [1:-2], ... every class eventually."""
    yield INF_POINT
    yield ZERO_POINT
    n = 1
    while True:
        yield ProjPoint(Fraction(1, n))
        yield ProjPoint(Fraction(-1, n))
        n += 1


def _coerce_weight(w) -> ExtRat:
    return w if isinstance(w, Infinity) else Fraction(w)


@dataclass(frozen=True)
class QuasiMonomialVal:
    """A dilatation program: centers, a coordinate frame, and monomial weights.

    The default instance is the order of vanishing at the origin (the m-adic
    valuation): no steps, identity frame, weights (1, 1).
    """

    steps: Tuple[ProjPoint, ...] = ()
    frame: LinearFrame = field(default=IDENTITY_FRAME)
    weights: Tuple[ExtRat, ExtRat] = (ONE, ONE)

    def __post_init__(self):
        steps = tuple(
            s if isinstance(s, ProjPoint) else ProjPoint(s) for s in self.steps
        )
        object.__setattr__(self, "steps", steps)
        w1, w2 = (_coerce_weight(w) for w in self.weights)
        if is_inf(w1) and is_inf(w2):
            raise BothWeightsInfiniteError("at most one weight may be infinite")
        if w1 <= 0 or w2 <= 0:
            raise ValueError("weights must be strictly positive")
        object.__setattr__(self, "weights", (w1, w2))
        if not isinstance(self.frame, LinearFrame):
            object.__setattr__(self, "frame", LinearFrame(self.frame))
        if is_inf(self(_X)) and is_inf(self(_Y)):
            raise ValueError(
                "illegal program: every element of the maximal ideal "
                "would get value infinity"
            )

    def __call__(self, phi: BivarPoly) -> ExtRat:
        return evaluate(self, phi)


_X = BivarPoly.var_x()
_Y = BivarPoly.var_y()


# ---------------------------------------------------------------------------
# evaluation
#
# The composed substitution image of x and y is computed once per valuation;
# evaluation of phi is then one polynomial combination plus a support scan.
# Coefficients are cleared to integers (support is unchanged by an overall
# scalar) so the hot loop runs on machine/bigint arithmetic, not Fractions.
# ---------------------------------------------------------------------------


def _step_images(step: ProjPoint) -> Tuple[BivarPoly, BivarPoly]:
    if step.is_inf:
        return BivarPoly.monomial(1, 1), _Y
    return _X, BivarPoly({(1, 1): ONE, (1, 0): step.value})


@lru_cache(maxsize=None)
def _images(
    steps: Tuple[ProjPoint, ...], frame: LinearFrame
) -> Tuple[BivarPoly, BivarPoly]:
    """Images of x and y under the full program (steps, then frame).

    Recursing on the step prefix means every truncation of a program reuses
    the cached images of its parent, so walking all levels of one chain costs
    a single pass instead of one rebuild per level.
    """
    if not frame.is_identity():
        ex, ey = _images(steps, IDENTITY_FRAME)
        inv = frame.inverse()
        fx, fy = inv.row_form(0), inv.row_form(1)
        return ex.substitute(fx, fy), ey.substitute(fx, fy)
    if not steps:
        return _X, _Y
    ex, ey = _images(steps[:-1], IDENTITY_FRAME)
    sx, sy = _step_images(steps[-1])
    return ex.substitute(sx, sy), ey.substitute(sx, sy)


def _clear(p: BivarPoly) -> Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...], Fraction]:
    denom = math.lcm(*(c.denominator for c in p.terms.values()))
    nums = [int(c * denom) for c in p.terms.values()]
    content = math.gcd(*nums)
    exps = tuple(p.terms.keys())
    return exps, tuple(n // content for n in nums), Fraction(content, denom)


@lru_cache(maxsize=None)
class _ImageState:
    """Cleared substitution images plus a monomial-power cache.

    Keyed on (steps, frame) only: valuations that differ in weights alone
    share this state, so renormalization costs nothing extra.
    """

    def __init__(self, steps: Tuple[ProjPoint, ...], frame: LinearFrame):
        ex, ey = _images(steps, frame)
        xe, xc, self.sx = _clear(ex)
        ye, yc, self.sy = _clear(ey)
        self.ix = dict(zip(xe, xc))
        self.iy = dict(zip(ye, yc))
        self._powers: Dict[Tuple[int, int], Dict[Tuple[int, int], int]] = {
            (0, 0): {(0, 0): 1}
        }


@lru_cache(maxsize=None)
class _Engine:
    """Per-valuation evaluation state; one instance per distinct program."""

    def __init__(self, nu: QuasiMonomialVal):
        state = _ImageState(nu.steps, nu.frame)
        self.sx, self.sy = state.sx, state.sy
        self.ix, self.iy = state.ix, state.iy
        self._powers = state._powers
        w1, w2 = nu.weights
        if is_inf(w2):
            self.mode = ("y_inf", w1)
        elif is_inf(w1):
            self.mode = ("x_inf", w2)
        else:
            q = math.lcm(w1.denominator, w2.denominator)
            self.mode = ("finite", int(w1 * q), int(w2 * q), q)

    def monomial_image(self, r: int, s: int) -> Dict[Tuple[int, int], int]:
        key = (r, s)
        while key not in self._powers:
            if s > 0:
                prev, mul = self._powers.get((r, s - 1)), self.iy
                if prev is None:
                    self.monomial_image(r, s - 1)
                    continue
            else:
                prev, mul = self._powers.get((r - 1, 0)), self.ix
                if prev is None:
                    self.monomial_image(r - 1, 0)
                    continue
            out: Dict[Tuple[int, int], int] = {}
            for (a, b), c in prev.items():
                for (u, v), d in mul.items():
                    e = (a + u, b + v)
                    w = out.get(e, 0) + c * d
                    if w:
                        out[e] = w
                    elif e in out:
                        del out[e]
            self._powers[key] = out
        return self._powers[key]

    def order_of_support(self, support: Iterable[Tuple[int, int]]) -> ExtRat:
        mode = self.mode
        if mode[0] == "finite":
            _, p1, p2, q = mode
            return Fraction(min(r * p1 + s * p2 for r, s in support), q)
        kind, w = mode
        idx = 1 if kind == "y_inf" else 0
        finite = [e[1 - idx] for e in support if e[idx] == 0]
        # a term containing the infinite-weight coordinate still contributes
        # finitely when its exponent there is zero; otherwise it is ignored
        if not finite:
            return INF
        return min(finite) * w

    def evaluate(self, phi: BivarPoly) -> ExtRat:
        if not phi.terms:
            return INF
        scaled = {
            e: c * self.sx**e[0] * self.sy**e[1] for e, c in phi.terms.items()
        }
        denom = math.lcm(*(c.denominator for c in scaled.values()))
        acc: Dict[Tuple[int, int], int] = {}
        for (r, s), c in scaled.items():
            k = int(c * denom)
            for e, m in self.monomial_image(r, s).items():
                w = acc.get(e, 0) + k * m
                if w:
                    acc[e] = w
                elif e in acc:
                    del acc[e]
        if not acc:  # the program substitution is injective; defensive only
            return INF
        return self.order_of_support(acc.keys())


def evaluate(nu: QuasiMonomialVal, phi: BivarPoly) -> ExtRat:
    """The value of nu on phi."""
    return _Engine(nu).evaluate(phi)


def evaluate_naive(nu: QuasiMonomialVal, phi: BivarPoly) -> ExtRat:
    """Reference evaluation by literal substitution; used as a cross-check."""
    work = phi
    for step in nu.steps:
        work = work.substitute(*_step_images(step))
    work = frame_apply(work, nu.frame)
    return weighted_order(work, *nu.weights)


@lru_cache(maxsize=None)
def m_value(nu: QuasiMonomialVal) -> Fraction:
    """The value of the maximal ideal: min of the values of x and y."""
    v = min(evaluate(nu, _X), evaluate(nu, _Y))
    assert not is_inf(v)
    return v


def monomial(g1, g2) -> QuasiMonomialVal:
    """The monomial valuation with values g1 on x and g2 on y."""
    return QuasiMonomialVal((), IDENTITY_FRAME, (g1, g2))


M_ADIC = QuasiMonomialVal()


def is_normalized(nu: QuasiMonomialVal) -> bool:
    return m_value(nu) == 1


def normalize(nu: QuasiMonomialVal) -> QuasiMonomialVal:
    """Scale the weights so the maximal ideal gets value exactly 1."""
    m = m_value(nu)
    if m == 1:
        return nu
    w1, w2 = nu.weights
    inv = 1 / m
    return QuasiMonomialVal(nu.steps, nu.frame, (scale(inv, w1), scale(inv, w2)))


def _require_normalized(nu: QuasiMonomialVal, op: str) -> None:
    if m_value(nu) != 1:
        raise PreconditionViolatedError(f"{op} requires a normalized valuation")


# ---------------------------------------------------------------------------
# dilatation, canonical forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Continue:
    step: ProjPoint
    tail: QuasiMonomialVal


@dataclass(frozen=True)
class Terminal:
    gamma: Fraction


@dataclass(frozen=True)
class Divisorial:
    gamma: Fraction


@dataclass(frozen=True)
class Curve:
    direction: ProjPoint
    gamma: Fraction


@dataclass(frozen=True)
class CanonicalForm:
    steps: Tuple[ProjPoint, ...]
    terminal: Union[Divisorial, Curve]


def dilate(nu: QuasiMonomialVal) -> Union[Continue, Terminal]:
    """One blow-up of a step-free program.

    Equal finite weights terminate (the valuation is that multiple of the
    m-adic one).  Otherwise the row of larger weight singles out the next
    center and the weights shrink by Euclidean subtraction; an infinite
    weight yields the eventually-constant curve tail.  Weights are exact
    rationals by construction, so this always terminates for finite pairs.
    """
    if nu.steps:
        raise PreconditionViolatedError("dilate expects the reduced head form")
    w1, w2 = nu.weights
    if not is_inf(w1) and not is_inf(w2) and w1 == w2:
        return Terminal(w1)
    big = 0 if w1 > w2 else 1
    large, small = nu.weights[big], nu.weights[1 - big]
    p, q = nu.frame.rows[big]
    if q != 0:
        return Continue(ProjPoint(-p / q), monomial(small, large - small))
    return Continue(INF_POINT, monomial(large - small, small))


@lru_cache(maxsize=None)
def _canonicalize_raw(nu: QuasiMonomialVal) -> CanonicalForm:
    steps = list(nu.steps)
    head = QuasiMonomialVal((), nu.frame, nu.weights)
    terminal: Union[Divisorial, Curve]
    while True:
        w1, w2 = head.weights
        if is_inf(w1) or is_inf(w2):
            big = 0 if is_inf(w1) else 1
            p, q = head.frame.rows[big]
            direction = INF_POINT if q == 0 else ProjPoint(p / q)
            terminal = Curve(direction, head.weights[1 - big])
            break
        step = dilate(head)
        if isinstance(step, Terminal):
            terminal = Divisorial(step.gamma)
            break
        steps.append(step.step)
        head = step.tail
    if isinstance(terminal, Curve):
        # fold trailing steps that merely re-state the curve's own direction
        d = terminal.direction
        while steps and d in (ZERO_POINT, INF_POINT):
            last = steps[-1]
            assert last.is_inf == d.is_inf
            steps.pop()
            d = direction_of_center(last)
        terminal = Curve(d, terminal.gamma)
    return CanonicalForm(tuple(steps), terminal)


def canonicalize(nu: QuasiMonomialVal) -> CanonicalForm:
    """The identity-deciding normal form: reduced steps plus a terminal."""
    _require_normalized(nu, "canonicalize")
    return _canonicalize_raw(nu)


@lru_cache(maxsize=None)
def from_canonical(form: CanonicalForm) -> QuasiMonomialVal:
    """Rebuild a concrete program from a canonical form."""
    t = form.terminal
    if isinstance(t, Divisorial):
        return QuasiMonomialVal(form.steps, IDENTITY_FRAME, (t.gamma, t.gamma))
    if t.direction.is_inf:
        return QuasiMonomialVal(form.steps + (INF_POINT,), IDENTITY_FRAME, (INF, t.gamma))
    return QuasiMonomialVal(
        form.steps + (center_of_direction(t.direction),),
        IDENTITY_FRAME,
        (t.gamma, INF),
    )


def equal_valuations(nu: QuasiMonomialVal, mu: QuasiMonomialVal) -> bool:
    """Equality of normalized valuations, decided on canonical forms."""
    _require_normalized(nu, "equal_valuations")
    _require_normalized(mu, "equal_valuations")
    return _canonicalize_raw(nu) == _canonicalize_raw(mu)


class _TerminalMarker:
    def __repr__(self) -> str:
        return "TERMINAL"


TERMINAL = _TerminalMarker()


def _curve_tail_center(direction: ProjPoint) -> ProjPoint:
    return INF_POINT if direction.is_inf else ZERO_POINT


def _tail_at(form: CanonicalForm, i: int) -> QuasiMonomialVal:
    if i <= len(form.steps):
        return from_canonical(CanonicalForm(form.steps[i:], form.terminal))
    t = form.terminal
    assert isinstance(t, Curve)
    return from_canonical(
        CanonicalForm((), Curve(direction_of_center(_curve_tail_center(t.direction)), t.gamma))
    )


def multiplicity_stream(nu: QuasiMonomialVal):
    """Yield (center, m) along the dilatation sequence.

    Divisorial programs end with a (TERMINAL, gamma) entry; curve programs
    yield their eventually-constant tail forever.
    """
    form = _canonicalize_raw(nu)
    for i, center in enumerate(form.steps):
        yield center, m_value(_tail_at(form, i))
    t = form.terminal
    if isinstance(t, Divisorial):
        yield TERMINAL, t.gamma
        return
    yield center_of_direction(t.direction), t.gamma
    constant = _curve_tail_center(t.direction)
    while True:
        yield constant, t.gamma


def dilatation_length(nu: QuasiMonomialVal) -> Union[int, Infinity]:
    """Number of dilatations, counting the terminal ring; infinite for curves."""
    form = _canonicalize_raw(nu)
    if isinstance(form.terminal, Curve):
        return INF
    return len(form.steps) + 1


# ---------------------------------------------------------------------------
# the infimum construction
# ---------------------------------------------------------------------------


def _center_at(form: CanonicalForm, i: int) -> Optional[ProjPoint]:
    """Center chosen at level i, or None once a divisorial terminal is hit."""
    if i < len(form.steps):
        return form.steps[i]
    t = form.terminal
    if isinstance(t, Divisorial):
        return None
    if i == len(form.steps):
        return center_of_direction(t.direction)
    return _curve_tail_center(t.direction)


def _head_exceptional(nu: QuasiMonomialVal) -> Optional[ProjPoint]:
    """The unique direction valued above the m-value, if any."""
    form = _canonicalize_raw(nu)
    if form.steps:
        return direction_of_center(form.steps[0])
    if isinstance(form.terminal, Curve):
        return form.terminal.direction
    return None


def exceptional_direction(nu: QuasiMonomialVal) -> Optional[ProjPoint]:
    """The class [a:b] with nu(a*x + b*y) > 1, or None for the m-adic valuation."""
    _require_normalized(nu, "exceptional_direction")
    return _head_exceptional(nu)


def _monomial_meet(
    prefix: Sequence[ProjPoint],
    tail_a: QuasiMonomialVal,
    tail_b: QuasiMonomialVal,
    side_a: QuasiMonomialVal,
    side_b: QuasiMonomialVal,
) -> QuasiMonomialVal:
    """Meet when the level multiplicities first differ.

    The shared coordinate gets the smaller multiplicity; the complementary
    coordinate must be the exceptional direction of the smaller side (a
    generic choice would drop strictly below the true infimum).
    """
    m_a, m_b = m_value(tail_a), m_value(tail_b)
    exc_a, exc_b = _head_exceptional(tail_a), _head_exceptional(tail_b)
    if m_a < m_b:
        small, small_exc = side_a, exc_a
    else:
        small, small_exc = side_b, exc_b
    if small_exc is None:
        return small
    x_dir = next(d for d in direction_enumeration() if d != exc_a and d != exc_b)
    lx, ly = x_dir.form(), small_exc.form()
    assert evaluate(tail_a, lx) == m_a and evaluate(tail_b, lx) == m_b
    v_x = min(m_a, m_b)
    v_y = min(evaluate(tail_a, ly), evaluate(tail_b, ly))
    frame = LinearFrame(
        (
            tuple(Fraction(v) for v in x_dir.as_pair()),
            tuple(Fraction(v) for v in small_exc.as_pair()),
        )
    )
    result = QuasiMonomialVal(tuple(prefix), frame, (v_x, v_y))
    assert m_value(result) == 1
    return from_canonical(_canonicalize_raw(result))


@lru_cache(maxsize=None)
def meet(nu: QuasiMonomialVal, mu: QuasiMonomialVal) -> QuasiMonomialVal:
    """Greatest common lower bound of two normalized valuations.

    Walks the two dilatation sequences in lockstep and resolves the first
    divergence: differing multiplicities produce a monomial valuation in
    matched coordinates, a divisorial terminal wins outright, and differing
    centers truncate to the shared divisorial level.
    """
    _require_normalized(nu, "meet")
    _require_normalized(mu, "meet")
    form_a, form_b = _canonicalize_raw(nu), _canonicalize_raw(mu)
    if form_a == form_b:
        return nu
    prefix: list = []
    for i in range(len(form_a.steps) + len(form_b.steps) + 2):
        tail_a, tail_b = _tail_at(form_a, i), _tail_at(form_b, i)
        if m_value(tail_a) != m_value(tail_b):
            return _monomial_meet(prefix, tail_a, tail_b, nu, mu)
        c_a, c_b = _center_at(form_a, i), _center_at(form_b, i)
        if c_a is None:
            return nu
        if c_b is None:
            return mu
        if c_a != c_b:
            shared = from_canonical(CanonicalForm(tuple(prefix), Divisorial(m_value(tail_a))))
            return normalize(shared)
        prefix.append(c_a)
    raise AssertionError("divergence search exceeded both program lengths")


class Comparison(Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def compare(nu: QuasiMonomialVal, mu: QuasiMonomialVal) -> Comparison:
    """Order of two normalized valuations, decided through the meet."""
    if equal_valuations(nu, mu):
        return Comparison.EQ
    w = _canonicalize_raw(meet(nu, mu))
    if w == _canonicalize_raw(nu):
        return Comparison.LT
    if w == _canonicalize_raw(mu):
        return Comparison.GT
    return Comparison.INCOMPARABLE


def infimum(vals: Iterable[QuasiMonomialVal]) -> QuasiMonomialVal:
    """Infimum of finitely many normalized valuations (a fold of meets)."""
    items = list(vals)
    if not items:
        raise EmptySetError("infimum of an empty family")
    out = items[0]
    _require_normalized(out, "infimum")
    for v in items[1:]:
        out = meet(out, v)
    return out


# ---------------------------------------------------------------------------
# residue classes of unit pairs
# ---------------------------------------------------------------------------


def _unit_residue(p: BivarPoly) -> Fraction:
    if p.is_zero():
        return ZERO
    c = p.constant_term()
    if c == 0:
        raise InvalidPairError(f"{p} is neither a unit nor zero")
    return c


def _pair_residues(pair: Tuple[BivarPoly, BivarPoly]) -> Tuple[Fraction, Fraction]:
    a, b = (_unit_residue(p) for p in pair)
    if a == 0 and b == 0:
        raise InvalidPairError("the zero pair has no class")
    return a, b


def sim_pairs(
    p1: Tuple[BivarPoly, BivarPoly], p2: Tuple[BivarPoly, BivarPoly]
) -> bool:
    """Whether a1*b2 - a2*b1 has vanishing constant term."""
    a1, b1 = _pair_residues(p1)
    a2, b2 = _pair_residues(p2)
    return a1 * b2 - a2 * b1 == 0


def residue_direction(pair: Tuple[BivarPoly, BivarPoly]) -> ProjPoint:
    """The class [a(0,0) : b(0,0)] of a unit-or-zero pair."""
    a, b = _pair_residues(pair)
    return ProjPoint(a / b) if b != 0 else INF_POINT


def common_minimizer(
    nu: QuasiMonomialVal, mu: QuasiMonomialVal
) -> Tuple[Fraction, Fraction]:
    """Coefficients (a, b) with nu(ax+by) = nu(m) and mu(ax+by) = mu(m)."""
    _require_normalized(nu, "common_minimizer")
    _require_normalized(mu, "common_minimizer")
    banned = {_head_exceptional(nu), _head_exceptional(mu)}
    d = next(p for p in direction_enumeration() if p not in banned)
    a, b = d.as_pair()
    return Fraction(a), Fraction(b)


def homogeneous_witness(nu: QuasiMonomialVal) -> Optional[BivarPoly]:
    """A degree-1 form valued above 1, or None when nu is the m-adic valuation."""
    _require_normalized(nu, "homogeneous_witness")
    d = _head_exceptional(nu)
    return None if d is None else d.form()


# ---------------------------------------------------------------------------
# topology membership predicates
# ---------------------------------------------------------------------------


def zariski_member(nu: QuasiMonomialVal, num: BivarPoly, den: BivarPoly) -> bool:
    """Whether num/den lies in the valuation ring of nu."""
    dv = evaluate(nu, den)
    if is_inf(dv):
        raise DivisionUndefinedError("denominator lies in the support")
    return evaluate(nu, num) >= dv


def patch_member(nu: QuasiMonomialVal, num: BivarPoly, den: BivarPoly) -> bool:
    """Strict variant: num/den lies in the maximal ideal of the valuation ring."""
    dv = evaluate(nu, den)
    if is_inf(dv):
        raise DivisionUndefinedError("denominator lies in the support")
    return evaluate(nu, num) > dv


def weak_member(nu: QuasiMonomialVal, phi: BivarPoly, alpha, sense: str) -> bool:
    """Subbasic weak-topology test: nu(phi) > alpha or nu(phi) < alpha."""
    if sense not in ("gt", "lt"):
        raise ValueError("sense must be 'gt' or 'lt'")
    v = evaluate(nu, phi)
    bound = Fraction(alpha)
    return v > bound if sense == "gt" else v < bound
