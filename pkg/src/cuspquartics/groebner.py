"""Buchberger's algorithm, normal forms and ideal membership.

The engine always returns the reduced Groebner basis (monic, inter-reduced,
sorted), so bases are unique per ideal and term order and every downstream
certificate is reproducible.  Pair selection follows the normal strategy;
useless pairs are discarded with Buchberger's product and chain criteria in
the Gebauer-Moeller formulation.  Over the rationals all internal arithmetic
is integer-only with content removal, which keeps coefficient growth in
check; remainders exposed to callers are exact.
"""

from __future__ import annotations

import heapq
from math import gcd

from .polyring import (
    QQ,
    RingMismatchError,
    integer_content_free,
    monomial_div,
    monomial_lcm,
    monomial_mul,
    negated_order_key,
)


class Ideal:
    """A finitely generated ideal; zero generators are dropped."""

    __slots__ = ("ring", "generators")

    def __init__(self, generators):
        generators = [g for g in generators if not g.is_zero()]
        if not generators:
            raise ValueError("ideal needs at least one polynomial (may be zero)")
        ring = generators[0].ring
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("ideal generators live in different rings")
        self.ring = ring
        self.generators = tuple(generators)

    @classmethod
    def spanned_by(cls, polys, ring=None):
        """Like the constructor, but tolerates an all-zero generator list."""
        nonzero = [g for g in polys if not g.is_zero()]
        if nonzero:
            return cls(nonzero)
        if ring is None:
            if not polys:
                raise ValueError("cannot infer ring for the zero ideal")
            ring = polys[0].ring
        ideal = cls.__new__(cls)
        ideal.ring = ring
        ideal.generators = ()
        return ideal

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, sorted by leading monomial."""

    __slots__ = ("ring", "polys", "reduced")

    def __init__(self, ring, polys, reduced=True):
        self.ring = ring
        self.polys = tuple(polys)
        self.reduced = reduced

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def leading_monomials(self):
        return tuple(g.leading_monomial() for g in self.polys)

    def verify_buchberger_criterion(self):
        """Re-check that every pair's S-polynomial reduces to zero."""
        polys = self.polys
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                s = s_polynomial(polys[i], polys[j])
                if not normal_form(s, self).is_zero():
                    return False
        return True

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements, {self.ring.order})"


def s_polynomial(f, g):
    """The lcm-cancellation combination of f and g; leading terms cancel."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s_polynomial needs nonzero inputs")
    if f.ring != g.ring:
        raise RingMismatchError("s_polynomial needs a common ring")
    ring = f.ring
    lmf, lcf = f.terms[0]
    lmg, lcg = g.terms[0]
    lcm = monomial_lcm(lmf, lmg)
    mf = ring.monomial(monomial_div(lcm, lmf), ring.domain.invert(lcf))
    mg = ring.monomial(monomial_div(lcm, lmg), ring.domain.invert(lcg))
    return mf * f - mg * g


# ---------------------------------------------------------------------------
# exact division by a list of polynomials (field coefficients)
# ---------------------------------------------------------------------------

def _divide_by_list(g, divisors):
    """Canonical remainder of g under full division by ``divisors``.

    Divisors are tried in their given order at every step, which makes the
    remainder deterministic; with a Groebner basis it is the normal form.
    """
    ring = g.ring
    dom = ring.domain
    negkey = negated_order_key(ring.order)
    leads = [(d.terms[0][0], d.terms[0][1], d.terms) for d in divisors]
    work = dict(g.terms)
    remainder = {}
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    while heap:
        _, lm = heapq.heappop(heap)
        c = work.get(lm)
        if c is None:
            continue
        hit = None
        for dlm, dlc, dterms in leads:
            q = monomial_div(lm, dlm)
            if q is not None:
                hit = (q, dlc, dterms)
                break
        if hit is None:
            remainder[lm] = c
            del work[lm]
            continue
        q, dlc, dterms = hit
        factor = dom.mul(c, dom.invert(dlc))
        for m, k in dterms:
            mm = monomial_mul(q, m)
            s = dom.add(work.get(mm, dom.zero), dom.neg(dom.mul(factor, k)))
            if dom.is_zero(s):
                work.pop(mm, None)
            else:
                if mm not in work:
                    heapq.heappush(heap, (negkey(mm), mm))
                work[mm] = s
    return ring.from_dict(remainder)


def normal_form(g, basis):
    """Remainder of g modulo a Groebner basis (deterministic, exact)."""
    if isinstance(basis, GroebnerBasis):
        if basis.ring != g.ring:
            raise RingMismatchError("polynomial and basis rings differ "
                                    "(order or variables mismatch)")
        divisors = basis.polys
    else:
        divisors = tuple(basis)
        for d in divisors:
            if d.ring != g.ring:
                raise RingMismatchError("polynomial and divisor rings differ")
    if not divisors:
        return g
    return _divide_by_list(g, divisors)


# ---------------------------------------------------------------------------
# integer engine over QQ
# ---------------------------------------------------------------------------

def _strip_content(d):
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return d
    if g > 1:
        return {m: v // g for m, v in d.items()}
    return d


def _reduce_int(p, basis, negkey):
    """Primitive remainder of integer dict p by [(lm, lc, items), ...]."""
    work = dict(p)
    remainder = {}
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, lm = heapq.heappop(heap)
        c = work.get(lm)
        if c is None:
            continue
        hit = None
        for blm, blc, bitems in basis:
            q = monomial_div(lm, blm)
            if q is not None:
                hit = (q, blc, bitems)
                break
        if hit is None:
            remainder[lm] = c
            del work[lm]
            continue
        q, blc, bitems = hit
        g = gcd(c, blc)
        a, b = c // g, blc // g
        if b < 0:
            a, b = -a, -b
        if b != 1:
            for m in work:
                work[m] *= b
            for m in remainder:
                remainder[m] *= b
        for m, k in bitems:
            mm = monomial_mul(q, m)
            s = work.get(mm, 0) - a * k
            if s:
                if mm not in work:
                    heapq.heappush(heap, (negkey(mm), mm))
                work[mm] = s
            else:
                work.pop(mm, None)
        steps += 1
        if steps % 64 == 0 and work:
            g = 0
            for v in work.values():
                g = gcd(g, v)
                if g == 1:
                    break
            else:
                for v in remainder.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                for m in work:
                    work[m] //= g
                for m in remainder:
                    remainder[m] //= g
    return _strip_content(remainder)


def _spair_int(fi, fj, key):
    """Integer S-polynomial of two primitive integer dicts."""
    lmi = max(fi, key=key)
    lmj = max(fj, key=key)
    lcm = monomial_lcm(lmi, lmj)
    ci, cj = fi[lmi], fj[lmj]
    g = gcd(ci, cj)
    mi, mj = monomial_div(lcm, lmi), monomial_div(lcm, lmj)
    a, b = cj // g, ci // g
    out = {}
    for m, c in fi.items():
        out[monomial_mul(m, mi)] = a * c
    for m, c in fj.items():
        mm = monomial_mul(m, mj)
        s = out.get(mm, 0) - b * c
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _update_pairs(lms, pairs, t):
    """Gebauer-Moeller pair update after appending element t.

    Implements Buchberger's product and chain criteria; ``lms`` holds the
    leading monomials including the new element at index t.
    """
    lmf = lms[t]
    kept = set()
    for i, j in pairs:
        lij = monomial_lcm(lms[i], lms[j])
        if (monomial_div(lij, lmf) is None
                or lij == monomial_lcm(lms[i], lmf)
                or lij == monomial_lcm(lms[j], lmf)):
            kept.add((i, j))
    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(monomial_lcm(lms[i], lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=sum):
        if all(monomial_div(L, M) is None for M in minimal):
            minimal.append(L)
    for L in minimal:
        group = by_lcm[L]
        # product criterion: drop the class if some member is coprime to lmf
        if any(monomial_lcm(lms[i], lmf) == monomial_mul(lms[i], lmf)
               for i in group):
            continue
        kept.add((min(group), t))
    return kept


def buchberger(ideal, order=None):
    """Reduced Groebner basis of an ideal (or a plain list of polynomials)."""
    if not isinstance(ideal, Ideal):
        ideal = Ideal.spanned_by(list(ideal))
    ring = ideal.ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        gens = [ring.convert(g) for g in ideal.generators]
    else:
        gens = list(ideal.generators)
    if not gens:
        return GroebnerBasis(ring, ())
    if ring.domain == QQ:
        basis_polys = _buchberger_qq(ring, gens)
    else:
        basis_polys = _buchberger_field(ring, gens)
    reduced = _interreduce(ring, basis_polys)
    return GroebnerBasis(ring, reduced)


def _buchberger_qq(ring, gens):
    key = ring.key
    negkey = negated_order_key(ring.order)
    G = []
    lms = []
    views = []
    pairs = set()

    def append(p):
        lm = max(p, key=key)
        G.append(p)
        lms.append(lm)
        views.append((lm, p[lm], tuple(p.items())))

    for g in gens:
        p = integer_content_free(g)
        if not p:
            continue
        append(p)
        pairs = _update_pairs(lms, pairs, len(G) - 1)

    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(monomial_lcm(lms[ij[0]], lms[ij[1]])),
                                          key(monomial_lcm(lms[ij[0]], lms[ij[1]])),
                                          ij))
        pairs.discard((i, j))
        s = _spair_int(G[i], G[j], key)
        if not s:
            continue
        r = _reduce_int(s, views, negkey)
        if not r:
            continue
        append(r)
        pairs = _update_pairs(lms, pairs, len(G) - 1)

    return [ring.from_dict(p) for p in G]


def _buchberger_field(ring, gens):
    key = ring.key
    negkey = negated_order_key(ring.order)
    G = [g.monic() for g in gens]
    lms = [g.leading_monomial() for g in G]
    pairs = set()
    for t in range(len(G)):
        pairs = _update_pairs(lms, pairs, t)
    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(monomial_lcm(lms[ij[0]], lms[ij[1]])),
                                          key(monomial_lcm(lms[ij[0]], lms[ij[1]])),
                                          ij))
        pairs.discard((i, j))
        s = s_polynomial(G[i], G[j])
        if s.is_zero():
            continue
        r = _divide_by_list(s, G)
        if r.is_zero():
            continue
        G.append(r.monic())
        lms.append(r.leading_monomial())
        pairs = _update_pairs(lms, pairs, len(G) - 1)
    return G


def _interreduce(ring, polys):
    """Minimalize, tail-reduce and sort; yields the unique reduced basis."""
    key = ring.key
    polys = sorted((p for p in polys if not p.is_zero()),
                   key=lambda p: key(p.leading_monomial()))
    minimal = []
    for p in polys:
        lm = p.leading_monomial()
        if all(monomial_div(lm, q.leading_monomial()) is None for q in minimal):
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _divide_by_list(p, others) if others else p
        reduced.append(r.monic())
    reduced.sort(key=lambda p: key(p.leading_monomial()))
    return reduced


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------

def _as_basis(ideal_or_basis, order=None):
    if isinstance(ideal_or_basis, GroebnerBasis):
        return ideal_or_basis
    return buchberger(ideal_or_basis, order)


def ideal_membership(g, ideal):
    """True iff g lies in the ideal (normal form vanishes)."""
    basis = _as_basis(ideal)
    if not basis.polys:
        return g.is_zero()
    return normal_form(g, basis).is_zero()


def radical_membership(g, ideal, p_max):
    """Least p <= p_max with g**p in the ideal, or None.

    Powers are tried in increasing order; each step reduces the previous
    normal form times g, so intermediate degrees stay small.
    """
    if p_max < 1:
        raise ValueError("p_max must be at least 1")
    basis = _as_basis(ideal)
    if not basis.polys:
        return 1 if g.is_zero() else None
    r = normal_form(g, basis)
    if r.is_zero():
        return 1
    for p in range(2, p_max + 1):
        r = normal_form(r * g, basis)
        if r.is_zero():
            return p
    return None


def is_zero_dimensional_affine(basis):
    """Standard test: each variable's pure power appears among the leads."""
    if not isinstance(basis, GroebnerBasis):
        raise TypeError("expected a GroebnerBasis")
    if not basis.polys:
        return False
    leads = basis.leading_monomials()
    nvars = basis.ring.nvars
    if any(sum(lm) == 0 for lm in leads):
        return True
    for i in range(nvars):
        if not any(lm[i] > 0 and sum(lm) == lm[i] for lm in leads):
            return False
    return True
