"""Quasi-monomial valuations: evaluation, normalization, canonical forms."""

import itertools
from fractions import Fraction

import pytest

from valtree.poly import BivarPoly, BothWeightsInfiniteError, LinearFrame, poly_parse
from valtree.rationals import INF, is_inf
from valtree.testkit import DEFAULT_SEED, gen_qmv, sample_polys
from valtree.valuation import (
    CanonicalForm,
    Curve,
    Divisorial,
    INF_POINT,
    M_ADIC,
    ProjPoint,
    QuasiMonomialVal,
    TERMINAL,
    Terminal,
    canonicalize,
    center_of_direction,
    dilatation_length,
    dilate,
    direction_enumeration,
    direction_of_center,
    equal_valuations,
    evaluate,
    evaluate_naive,
    from_canonical,
    is_normalized,
    m_value,
    monomial,
    multiplicity_stream,
    normalize,
)

X = BivarPoly.var_x()
Y = BivarPoly.var_y()
SWAP = LinearFrame(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(0))))


class TestProjPoint:
    def test_enumeration_head(self):
        six = list(itertools.islice(direction_enumeration(), 6))
        assert six == [
            INF_POINT,
            ProjPoint(0),
            ProjPoint(1),
            ProjPoint(-1),
            ProjPoint(Fraction(1, 2)),
            ProjPoint(Fraction(-1, 2)),
        ]

    def test_center_direction_involution(self):
        for c in (ProjPoint(Fraction(2, 3)), ProjPoint(0), INF_POINT):
            assert center_of_direction(direction_of_center(c)) == c

    def test_form(self):
        assert ProjPoint(2).form() == poly_parse("2*x + y")
        assert INF_POINT.form() == X

    def test_as_pair_primitive(self):
        assert ProjPoint(Fraction(-2, 4)).as_pair() == (-1, 2)
        assert INF_POINT.as_pair() == (1, 0)


class TestConstruction:
    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError):
            monomial(0, 1)
        with pytest.raises(ValueError):
            monomial(1, -2)

    def test_both_infinite_rejected(self):
        with pytest.raises(BothWeightsInfiniteError):
            QuasiMonomialVal((), weights=(INF, INF))

    def test_m_adic_normalized(self):
        assert is_normalized(M_ADIC)
        assert m_value(M_ADIC) == 1


class TestEvaluate:
    def test_monomial_weights(self):
        nu = monomial(1, Fraction(3, 2))
        assert evaluate(nu, poly_parse("x*y^2")) == 4
        assert evaluate(nu, poly_parse("x^3 + y^2")) == 3
        assert evaluate(nu, BivarPoly.constant(7)) == 0
        assert is_inf(evaluate(nu, BivarPoly.zero()))

    def test_m_adic_is_vanishing_order(self):
        phi = poly_parse("x^2*y + 3*y^2")
        assert evaluate(M_ADIC, phi) == 2

    def test_translated_step(self):
        # the program y <- x*(y+1) values y-x above the other lines through 0
        nu = QuasiMonomialVal((ProjPoint(1),), weights=(Fraction(1), Fraction(1)))
        assert evaluate(nu, poly_parse("y - x")) == 2
        assert evaluate(nu, poly_parse("y - 2*x")) == 1
        assert evaluate(nu, X) == 1
        assert evaluate(nu, Y) == 1

    def test_infinite_step(self):
        mu = QuasiMonomialVal((INF_POINT,), weights=(Fraction(1), Fraction(2)))
        assert evaluate(mu, X) == 3
        assert evaluate(mu, Y) == 2

    def test_curve_weights(self):
        nu = monomial(1, INF)
        assert is_inf(evaluate(nu, Y))
        assert evaluate(nu, poly_parse("y + x^5")) == 5
        assert evaluate(nu, X) == 1

    def test_frame_renames_coordinates(self):
        rho = QuasiMonomialVal((), SWAP, (Fraction(2), Fraction(1)))
        assert evaluate(rho, X) == 1
        assert evaluate(rho, Y) == 2
        assert equal_valuations(rho, monomial(1, 2))

    def test_agrees_with_naive_substitution(self):
        polys = sample_polys(DEFAULT_SEED, 8)
        for s in range(12):
            nu = gen_qmv(DEFAULT_SEED + s)
            for phi in polys:
                assert evaluate(nu, phi) == evaluate_naive(nu, phi)


class TestNormalize:
    def test_scales_by_m(self):
        nu = monomial(2, 3)
        assert m_value(nu) == 2
        assert normalize(nu).weights == (Fraction(1), Fraction(3, 2))

    def test_identity_when_normalized(self):
        nu = monomial(1, 2)
        assert normalize(nu) is nu

    def test_generated_values_are_normalized(self):
        for s in range(40):
            assert is_normalized(gen_qmv(DEFAULT_SEED + s))


class TestDilate:
    def test_equal_weights_terminate(self):
        assert dilate(monomial(1, 1)) == Terminal(Fraction(1))

    def test_finite_center(self):
        step = dilate(monomial(1, Fraction(5, 2)))
        assert step.step == ProjPoint(0)
        assert step.tail == monomial(1, Fraction(3, 2))

    def test_infinite_center(self):
        step = dilate(monomial(2, 1))
        assert step.step == INF_POINT
        assert step.tail == monomial(1, 1)

    def test_rejects_pending_steps(self):
        with pytest.raises(ValueError):
            dilate(QuasiMonomialVal((ProjPoint(0),), weights=(1, 2)))


class TestCanonical:
    def test_m_adic(self):
        assert canonicalize(M_ADIC) == CanonicalForm((), Divisorial(Fraction(1)))

    def test_euclid_chain(self):
        form = canonicalize(monomial(1, Fraction(5, 2)))
        assert form.steps == (ProjPoint(0), ProjPoint(0), INF_POINT)
        assert form.terminal == Divisorial(Fraction(1, 2))

    def test_curve_folds_tail(self):
        assert canonicalize(monomial(1, INF)) == CanonicalForm(
            (), Curve(ProjPoint(0), Fraction(1))
        )

    def test_identity_criterion(self):
        # same valuation through a renaming frame: same canonical form
        rho = QuasiMonomialVal((), SWAP, (Fraction(2), Fraction(1)))
        assert canonicalize(rho) == canonicalize(monomial(1, 2))
        assert not equal_valuations(monomial(1, 2), monomial(1, 3))

    def test_round_trip(self):
        for s in range(30):
            nu = gen_qmv(DEFAULT_SEED + s)
            form = canonicalize(nu)
            assert canonicalize(from_canonical(form)) == form
            assert equal_valuations(from_canonical(form), nu)


class TestMultiplicityStream:
    def test_euclid_fixture(self):
        rows = list(
            itertools.islice(multiplicity_stream(monomial(1, Fraction(5, 2))), 4)
        )
        assert rows == [
            (ProjPoint(0), Fraction(1)),
            (ProjPoint(0), Fraction(1)),
            (INF_POINT, Fraction(1, 2)),
            (TERMINAL, Fraction(1, 2)),
        ]
        assert dilatation_length(monomial(1, Fraction(5, 2))) == 4

    def test_m_adic_is_immediate(self):
        assert next(multiplicity_stream(M_ADIC)) == (TERMINAL, Fraction(1))
        assert dilatation_length(M_ADIC) == 1

    def test_curve_tail_repeats(self):
        rows = list(itertools.islice(multiplicity_stream(monomial(1, INF)), 5))
        assert rows == [(ProjPoint(0), Fraction(1))] * 5
        assert is_inf(dilatation_length(monomial(1, INF)))

    def test_multiplicities_never_increase(self):
        for s in range(25):
            nu = gen_qmv(DEFAULT_SEED + 100 + s)
            ms = [m for _, m in itertools.islice(multiplicity_stream(nu), 8)]
            assert all(a >= b for a, b in zip(ms, ms[1:]))
            assert ms[0] == 1
