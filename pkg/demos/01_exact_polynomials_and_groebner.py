"""Tour of the exact polynomial layer and the Groebner engine.

Everything below is exact rational arithmetic: no floats anywhere, so every
printed equality is a theorem about integers.
"""

from cuspquartics import GF, Ideal, PolyRing, buchberger, normal_form, radical_membership
from cuspquartics.groebner import is_zero_dimensional_affine, s_polynomial

ring = PolyRing(("x0", "x1", "x2", "x3"))
x0, x1, x2, x3 = ring.gens()

# Polynomials parse from plain ASCII and print back canonically (grevlex).
s = ring.parse("49*x1^2 + x2^2 - 36*x3^2 - 14*x0^2")
print("parsed:", s)
print("value at (1,1,1,1):", s.evaluate((1, 1, 1, 1)))

# Exact division either succeeds exactly or refuses loudly.
product = (x0 + x1) * (x0 - x1)
print("(x0+x1)(x0-x1) =", product)
print("divided back:", product.exact_divide(x0 - x1))

# Term orders are explicit; re-sorting never happens behind your back.
lex_ring = ring.with_order("lex")
f = ring.parse("x0 + x1^2")
print("grevlex leading monomial:", f.leading_monomial())
print("lex leading monomial:    ", lex_ring.convert(f).leading_monomial())

# Buchberger's algorithm returns the reduced basis, which is unique, so the
# same ideal always prints the same way.
plane = PolyRing(("u", "v"))
u, v = plane.gens()
basis = buchberger(Ideal([u ** 2 - v, v ** 2 - u]))
print("\nreduced basis:", [str(g) for g in basis])
print("s-polynomial audit passes:", basis.verify_buchberger_criterion())
print("normal form of u^4 - u:", normal_form(u ** 4 - u, basis))
print("zero-dimensional:", is_zero_dimensional_affine(basis))

# Radical membership by raising powers: the workhorse behind every
# singular-locus certificate in this package.
print("\nleast p with u^p in <u^2>:",
      radical_membership(u, Ideal([u ** 2]), 8))
print("u + 1 never enters <u>:",
      radical_membership(u + 1, Ideal([u]), 8))

# S-polynomials cancel leading terms by construction.
lex2 = PolyRing(("x0", "x1"), order="lex")
a, b = lex2.gens()
print("\nS(x0 + x1, x1 + 1) =", s_polynomial(a + b, b + lex2.one()))

# Prime fields are available as a fast probabilistic backend.
gf7 = PolyRing(("x",), GF(7))
x, = gf7.gens()
print("\nover GF(7): (x + 1)^7 =", (x + 1) ** 7)
