"""
Rank-2 refinements of curve valuations
======================================

A valuation that sends some curve equation to infinity refines to a rank-2
valuation: count the generator multiplicity first, value the residual factor
second, compare lexicographically.
"""

from fractions import Fraction

from valtree import (
    INF,
    KrullRank2,
    KrullSameRank1,
    equal_valuations,
    krull_lift,
    monomial,
    normalize,
    poly_parse,
    rank1_section,
    rank2_eval,
)

# -- a support-free valuation is its own refinement ---------------------------

result = krull_lift(monomial(1, 1))
assert isinstance(result, KrullSameRank1)
print("monomial (1,1) lifts to itself:", equal_valuations(result.valuation, monomial(1, 1)))

# -- the y-axis curve ----------------------------------------------------------

result = krull_lift(monomial(1, INF))
assert isinstance(result, KrullRank2)
print("\nsupport generator:", result.support_generator)
for text in ("x", "y", "x*y^2", "y^3 + x*y"):
    print(f"  value of {text}:", rank2_eval(result.val, poly_parse(text)))

# the first component counts how often y divides; the second values the rest
v = rank2_eval(result.val, poly_parse("x^2*y^3"))
print("x^2*y^3 ->", v, " (three factors of y, then x^2 has value 2)")

# -- products stay additive, componentwise -------------------------------------

p, q = poly_parse("x + y"), poly_parse("y^2 - x^3")
vp, vq = rank2_eval(result.val, p), rank2_eval(result.val, q)
vpq = rank2_eval(result.val, p * q)
print(f"\nadditivity: {vp} + {vq} = {vpq}")

# -- the rank-1 section undoes the lift ----------------------------------------

back = rank1_section(result.val)
print("\nsection recovers the curve valuation:",
      equal_valuations(normalize(back), monomial(1, INF)))
