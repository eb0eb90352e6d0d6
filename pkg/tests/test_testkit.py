"""Seeded generators and independent oracles."""

import itertools
from fractions import Fraction

import pytest

from valtree.poly import BivarPoly
from valtree.rationals import INF, is_inf
from valtree.testkit import (
    DEFAULT_SEED,
    ConsistentWithLeq,
    Counterexample,
    brute_meet_oracle,
    curvette,
    euclid_multiplicity_oracle,
    gen_poly,
    gen_qmv,
    gen_tree,
    gen_unit_pair,
    pair_form,
    sample_polys,
    sampling_leq_oracle,
)
from valtree.tree import t_meet
from valtree.valuation import (
    Curve,
    CanonicalForm,
    INF_POINT,
    ProjPoint,
    canonicalize,
    dilatation_length,
    evaluate,
    from_canonical,
    is_normalized,
    m_value,
    monomial,
    multiplicity_stream,
    normalize,
)

X = BivarPoly.var_x()
Y = BivarPoly.var_y()


class TestGenerators:
    def test_deterministic(self):
        assert gen_poly(5) == gen_poly(5)
        assert gen_qmv(5) == gen_qmv(5)
        assert gen_tree(5).edges == gen_tree(5).edges
        assert gen_unit_pair(5) == gen_unit_pair(5)

    def test_sample_polys_stream(self):
        batch = sample_polys(DEFAULT_SEED, 10)
        assert len(batch) == 10
        assert batch[0] == gen_poly(DEFAULT_SEED) or len(set(map(str, batch))) > 1

    def test_qmv_outputs_are_normalized(self):
        for s in range(60):
            assert is_normalized(gen_qmv(s))

    def test_qmv_respects_depth_bound(self):
        for s in range(60):
            lam = dilatation_length(gen_qmv(s, max_depth=4))
            if not is_inf(lam):
                assert lam <= 4 + 4 + 1

    def test_bad_bounds_rejected(self):
        with pytest.raises(ValueError):
            gen_poly(1, max_terms=0)
        with pytest.raises(ValueError):
            gen_qmv(1, max_depth=-1)


class TestEuclidOracle:
    def test_fixtures(self):
        assert euclid_multiplicity_oracle(1, 1) == []
        assert euclid_multiplicity_oracle(1, 2) == [Fraction(1)]
        assert euclid_multiplicity_oracle(2, 3) == [Fraction(2), Fraction(1)]
        assert euclid_multiplicity_oracle(1, Fraction(5, 2)) == [
            Fraction(1),
            Fraction(1),
            Fraction(1, 2),
        ]

    def test_matches_the_stream(self):
        import random

        rng = random.Random(DEFAULT_SEED)
        for _ in range(40):
            g1 = Fraction(rng.randint(1, 12), rng.randint(1, 12))
            g2 = Fraction(rng.randint(1, 12), rng.randint(1, 12))
            oracle = euclid_multiplicity_oracle(g1, g2)
            nu = monomial(g1, g2)
            rows = list(itertools.islice(multiplicity_stream(nu), len(oracle)))
            assert [m for _, m in rows] == oracle


class TestCurvette:
    def test_level_zero_is_the_linear_form(self):
        assert curvette((), ProjPoint(-2)) == Y - X - X
        assert curvette((), INF_POINT) == X
        assert curvette((), ProjPoint(0)) == Y

    def test_blown_down_fixture(self):
        phi = curvette((ProjPoint(0),), ProjPoint(1))
        nu = normalize(
            from_canonical(
                CanonicalForm((ProjPoint(0),), Curve(ProjPoint(1), Fraction(1)))
            )
        )
        assert is_inf(evaluate(nu, phi))

    def test_matching_curve_values_it_infinitely(self):
        for s in range(25):
            nu = gen_qmv(3000 + s)
            form = canonicalize(nu)
            if not isinstance(form.terminal, Curve):
                continue
            phi = curvette(form.steps, form.terminal.direction)
            assert is_inf(evaluate(nu, phi))

    def test_other_valuations_stay_finite(self):
        phi = curvette((ProjPoint(0),), ProjPoint(1))
        assert not is_inf(evaluate(monomial(1, 2), phi))

    def test_primitive_integer_coefficients(self):
        import math

        phi = curvette((ProjPoint(Fraction(2, 3)), ProjPoint(Fraction(-1, 2))), ProjPoint(5))
        nums = [c for c in phi.terms.values()]
        assert all(c == int(c) for c in nums)
        assert math.gcd(*(int(c) for c in nums)) == 1


class TestSamplingOracle:
    def test_finds_the_separating_probe(self):
        hit = sampling_leq_oracle(monomial(1, 3), monomial(1, 2))
        assert isinstance(hit, Counterexample)
        assert evaluate(monomial(1, 3), hit.phi) > evaluate(monomial(1, 2), hit.phi)

    def test_true_order_passes(self):
        hit = sampling_leq_oracle(monomial(1, 1), monomial(1, 2))
        assert isinstance(hit, ConsistentWithLeq)


class TestTreeOracle:
    def test_brute_meet_matches(self):
        t = gen_tree(7, max_nodes=10)
        pts = t.grid_points(2)
        for p in pts[:6]:
            for q in pts[:6]:
                assert brute_meet_oracle(t, p, q) == t_meet(p, q)


class TestUnitPairs:
    def test_not_both_zero(self):
        for s in range(30):
            a, b = gen_unit_pair(s)
            assert not (a.is_zero() and b.is_zero())
            for p in (a, b):
                if not p.is_zero():
                    assert p.constant_term() != 0

    def test_pair_form(self):
        one = BivarPoly.constant(1)
        assert pair_form((one, one)) == X + Y
