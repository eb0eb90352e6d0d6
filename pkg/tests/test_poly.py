"""Sparse bivariate polynomials, linear frames, and weighted orders."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from valtree.poly import (
    BivarPoly,
    BothWeightsInfiniteError,
    IDENTITY_FRAME,
    LinearFrame,
    PolyParseError,
    divide_out_linear,
    frame_apply,
    poly_parse,
    weighted_order,
)
from valtree.rationals import INF, ZERO

X = BivarPoly.var_x()
Y = BivarPoly.var_y()


def fractions(max_num=30, max_den=8):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def polys(max_deg=5, max_terms=5):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.builds(
        BivarPoly,
        st.dictionaries(exps, fractions(), max_size=max_terms),
    )


class TestArithmetic:
    def test_zero_identity(self):
        assert X + BivarPoly.zero() == X
        assert (X * BivarPoly.zero()).is_zero()

    @given(polys(), polys())
    def test_addition_commutes(self, p, q):
        assert p + q == q + p

    @given(polys(), polys(), polys())
    def test_distributivity(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys(), polys())
    def test_product_degree(self, p, q):
        if not p.is_zero() and not q.is_zero():
            assert (p * q).total_degree() == p.total_degree() + q.total_degree()

    def test_cancellation_drops_terms(self):
        p = X + Y
        q = X - Y
        assert (p + q).terms == {(1, 0): Fraction(2)}


class TestParse:
    def test_examples(self):
        assert poly_parse("y") == Y
        assert poly_parse("x*y^2") == X * Y * Y
        assert poly_parse("x^2 - 2*x*y + y^2") == (X - Y) * (X - Y)
        assert poly_parse("3/2*x + 1") == X * Fraction(3, 2) + BivarPoly.constant(1)
        assert poly_parse("-x - -y") == Y - X

    @given(polys())
    def test_round_trip(self, p):
        assert poly_parse(str(p)) == p

    @pytest.mark.parametrize("bad", ["", "x +", "z", "x^-1", "x^1/2", "2 3", "x y"])
    def test_rejects(self, bad):
        with pytest.raises(PolyParseError):
            poly_parse(bad)


class TestWeightedOrder:
    def test_monomial_formula(self):
        assert weighted_order(X * Y * Y, Fraction(1), Fraction(3, 2)) == Fraction(4)

    def test_min_over_support(self):
        p = poly_parse("x^3 + x*y")
        assert weighted_order(p, Fraction(1), Fraction(5, 2)) == Fraction(3)

    def test_zero_polynomial_is_infinite(self):
        assert weighted_order(BivarPoly.zero(), Fraction(1), Fraction(2)) is INF

    def test_zero_times_inf_is_zero(self):
        # the exponent-0 variable contributes nothing even at infinite weight
        assert weighted_order(X, Fraction(1), INF) == Fraction(1)
        assert weighted_order(Y, INF, Fraction(2)) == Fraction(2)
        assert weighted_order(BivarPoly.constant(5), INF, Fraction(1)) == ZERO

    def test_both_infinite_rejected(self):
        with pytest.raises(BothWeightsInfiniteError):
            weighted_order(X, INF, INF)

    @given(polys(), polys(), fractions(6, 4), fractions(6, 4))
    def test_product_rule(self, p, q, a, b):
        g1, g2 = abs(a) + 1, abs(b) + 1
        lhs = weighted_order(p * q, g1, g2)
        r1, r2 = weighted_order(p, g1, g2), weighted_order(q, g1, g2)
        assert lhs == (INF if r1 is INF or r2 is INF else r1 + r2)


class TestFrames:
    def test_identity(self):
        assert IDENTITY_FRAME.is_identity()
        assert frame_apply(X * Y, IDENTITY_FRAME) == X * Y

    def test_inverse_round_trip(self):
        f = LinearFrame(((Fraction(1), Fraction(2)), (Fraction(0), Fraction(1))))
        p = poly_parse("x^2 + 3*y")
        assert frame_apply(frame_apply(p, f), f.inverse()) == p

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            LinearFrame(((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4))))

    def test_row_form(self):
        f = LinearFrame(((Fraction(1), Fraction(0)), (Fraction(-2), Fraction(1))))
        assert f.row_form(1) == Y - X - X


class TestDivideOutLinear:
    def test_splits_power(self):
        gen = poly_parse("y - 2*x")
        phi = gen * gen * poly_parse("x + y")
        r, psi = divide_out_linear(phi, gen)
        assert r == 2
        assert psi == poly_parse("x + y")

    def test_coprime_unchanged(self):
        r, psi = divide_out_linear(X + Y, Y)
        assert (r, psi) == (0, X + Y)
