"""Shared helpers for the randomized property suites.

Each check_* function runs the stated number of random cases at a given rng
and raises on the first violation; the acceptance suite runs them at the
contract counts, the unit suites reuse them at smaller sizes.
"""

from fractions import Fraction

from cuspquartics.geometry import fiber_change
from cuspquartics.groebner import Ideal, buchberger
from cuspquartics.polyring import QQ, PolyRing, order_key


def random_monomial(rng, nvars, max_degree):
    exps = [0] * nvars
    for _ in range(rng.randint(0, max_degree)):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_polynomial(rng, ring, max_degree=6, max_terms=5, coeff_bound=9,
                      fractions=True):
    acc = {}
    for _ in range(rng.randint(0, max_terms)):
        m = random_monomial(rng, ring.nvars, max_degree)
        c = Fraction(rng.randint(-coeff_bound, coeff_bound))
        if fractions and rng.random() < 0.25:
            c /= rng.randint(2, 4)
        acc[m] = acc.get(m, Fraction(0)) + c
    return ring.from_dict(acc)


def random_nonzero(rng, ring, **kw):
    while True:
        f = random_polynomial(rng, ring, **kw)
        if not f.is_zero():
            return f


def check_ring_axioms(rng, cases):
    ring = PolyRing(("x0", "x1", "x2", "x3"), QQ, "grevlex")
    for _ in range(cases):
        f = random_polynomial(rng, ring, max_degree=6, max_terms=4)
        g = random_polynomial(rng, ring, max_degree=6, max_terms=4)
        h = random_polynomial(rng, ring, max_degree=6, max_terms=4)
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f + ring.zero() == f and f * ring.one() == f


def check_order_axioms(rng, cases):
    for order in ("grevlex", "lex", "grlex"):
        key = order_key(order)
        unit = (0, 0, 0, 0)
        for _ in range(cases):
            a = random_monomial(rng, 4, 5)
            b = random_monomial(rng, 4, 5)
            c = random_monomial(rng, 4, 5)
            if key(a) < key(b):
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert key(ac) < key(bc)
            if a != unit:
                assert key(unit) < key(a)
            assert (key(a) < key(b)) + (key(b) < key(a)) + (a == b) == 1


def check_exact_divide_roundtrip(rng, cases):
    ring = PolyRing(("x0", "x1", "x2", "x3"), QQ, "grevlex")
    for _ in range(cases):
        f = random_polynomial(rng, ring, max_degree=3, max_terms=4)
        g = random_nonzero(rng, ring, max_degree=3, max_terms=3)
        assert (f * g).exact_divide(g) == f


def check_substitute_homomorphism(rng, cases):
    ring = PolyRing(("x0", "x1", "x2", "x3"), QQ, "grevlex")
    target = PolyRing(("y0", "y1", "y2"), QQ, "grevlex")
    for _ in range(cases):
        images = tuple(random_polynomial(rng, target, max_degree=2, max_terms=3)
                       for _ in range(4))
        f = random_polynomial(rng, ring, max_degree=3, max_terms=3)
        g = random_polynomial(rng, ring, max_degree=3, max_terms=3)
        assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)
        assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)


def check_parse_format_roundtrip(rng, cases):
    ring = PolyRing(("x0", "x1", "x2", "x3"), QQ, "grevlex")
    for _ in range(cases):
        f = random_polynomial(rng, ring, max_degree=6, max_terms=6)
        assert ring.parse(str(f)) == f


def check_groebner_uniqueness(rng, cases):
    """Permuted and rescaled generators give the identical reduced basis.

    Returns the computed bases so callers can audit them.
    """
    bases = []
    for _ in range(cases):
        nvars = rng.choice((2, 3))
        ring = PolyRing(tuple(f"x{i}" for i in range(nvars)), QQ, "grevlex")
        gens = [random_nonzero(rng, ring, max_degree=2, max_terms=3,
                               coeff_bound=4, fractions=False)
                for _ in range(rng.choice((2, 3)))]
        basis = buchberger(Ideal(gens))
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [g.scale(Fraction(rng.choice((1, 2, 3, -1, -2, 5)),
                                   rng.choice((1, 2, 3))))
                  for g in shuffled]
        again = buchberger(Ideal(scaled))
        assert basis.polys == again.polys
        bases.append(basis)
    return bases


def audit_bases(bases):
    for basis in bases:
        assert basis.verify_buchberger_criterion()


def check_fiber_change_identity(rng, family, cases):
    for _ in range(cases):
        while True:
            a = tuple(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                            for _ in range(2)) for _ in range(2))
            if a[0][0] * a[1][1] - a[0][1] * a[1][0] != 0:
                break
        result = fiber_change(family, a)
        assert result.verified
