"""
Infima of normalized valuations
===============================

Any two normalized valuations have a greatest common lower bound, computed
by walking their canonical dilatation chains in lockstep.  The result is
exact and decides the order relation as a byproduct.
"""

from fractions import Fraction

from valtree import (
    CanonicalForm,
    Comparison,
    Divisorial,
    ProjPoint,
    canonicalize,
    common_minimizer,
    compare,
    evaluate,
    from_canonical,
    infimum,
    m_value,
    meet,
    monomial,
    normalize,
    poly_parse,
)

# -- two transverse monomial valuations drop to the m-adic one ---------------

left, right = monomial(1, 2), monomial(2, 1)
w = meet(left, right)
print("meet of (1,2) and (2,1):", canonicalize(w))

# comparable weights keep the smaller valuation
print("meet of (1,2) and (1,3):", canonicalize(meet(monomial(1, 2), monomial(1, 3))))

# -- sibling programs meet at their common stage ------------------------------

def chain(*centers):
    steps = tuple(ProjPoint(Fraction(c)) for c in centers)
    return normalize(from_canonical(CanonicalForm(steps, Divisorial(Fraction(1)))))

a, b = chain(0, 1), chain(0, 2)
print("siblings behind center 0 meet at:", canonicalize(meet(a, b)))

# -- the meet is a lower bound on every polynomial ----------------------------

w = meet(a, monomial(1, Fraction(5, 2)))
for text in ("x", "y", "y - x", "y^2 - x^3"):
    phi = poly_parse(text)
    print(f"  w({text}) = {evaluate(w, phi)}  <=  "
          f"min({evaluate(a, phi)}, {evaluate(monomial(1, Fraction(5, 2)), phi)})")

# -- compare and n-ary infima -------------------------------------------------

print("\ncompare (1,2) vs (1,3):", compare(monomial(1, 2), monomial(1, 3)).value)
print("compare (1,2) vs (2,1):", compare(monomial(1, 2), monomial(2, 1)).value)
assert compare(monomial(1, 2), monomial(2, 1)) is Comparison.INCOMPARABLE

family = [monomial(1, 2), monomial(1, 3), chain(0, 1)]
print("infimum of three valuations:", canonicalize(infimum(family)))

# -- a shared linear form realizing both m-values -----------------------------

nu, mu = monomial(1, 2), chain(1)
av, bv = common_minimizer(nu, mu)
form = poly_parse("x") * av + poly_parse("y") * bv
print(f"\ncommon minimizer {form}: nu -> {evaluate(nu, form)} (m = {m_value(nu)}),",
      f"mu -> {evaluate(mu, form)} (m = {m_value(mu)})")
