"""
A tour of quasi-monomial valuations
===================================

Weights on the two coordinates give the simplest valuations; translated
dilatation programs and curve-type weights give all the rest.  Everything
below is exact rational arithmetic.
"""

from fractions import Fraction

from valtree import (
    INF,
    M_ADIC,
    ProjPoint,
    QuasiMonomialVal,
    canonicalize,
    dilatation_length,
    evaluate,
    m_value,
    monomial,
    multiplicity_stream,
    normalize,
    poly_parse,
)

# -- monomial weights -------------------------------------------------------

nu = monomial(1, Fraction(3, 2))
for text in ("x", "y", "x*y^2", "x^3 + y^2"):
    print(f"nu({text}) = {evaluate(nu, poly_parse(text))}")

# the order-of-vanishing valuation is the monomial one with equal weights
print("m-adic value of x^2*y + 3*y^2:", evaluate(M_ADIC, poly_parse("x^2*y + 3*y^2")))

# -- translated programs ----------------------------------------------------

# one dilatation toward the line y = x: the program y <- x*(y + 1)
mu = QuasiMonomialVal((ProjPoint(1),), weights=(Fraction(1), Fraction(1)))
print("\nafter one translated dilatation:")
print("mu(y - x) =", evaluate(mu, poly_parse("y - x")), " (the followed line)")
print("mu(y - 2*x) =", evaluate(mu, poly_parse("y - 2*x")), " (any other line)")

# -- normalization ----------------------------------------------------------

rho = monomial(2, 3)
print("\nm(rho) =", m_value(rho), "-> normalized weights", normalize(rho).weights)

# -- canonical forms and multiplicity streams --------------------------------

nu = monomial(1, Fraction(5, 2))
print("\ncanonical form of monomial (1, 5/2):", canonicalize(nu))
print("dilatation length:", dilatation_length(nu))
stream = multiplicity_stream(nu)
for level in range(4):
    center, m = next(stream)
    print(f"  level {level}: center {center}, m = {m}")

# a curve-type valuation never terminates; its tail repeats one center
curve = monomial(1, INF)
print("\ncurve canonical form:", canonicalize(curve))
print("curve values: nu(y) =", evaluate(curve, poly_parse("y")),
      " nu(y + x^5) =", evaluate(curve, poly_parse("y + x^5")))
