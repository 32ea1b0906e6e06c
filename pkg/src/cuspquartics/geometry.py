"""Quartic surfaces carrying three-divisible cusp configurations.

Builds the determinantal families: two contact cubics and a contact quadric
over a residual quadric, the three quadrics cutting the degree-3 carrier
curve, the quartic itself (by exact division and by the 2x2 determinant,
which agree identically), configuration classification, cusp search with
exact rational root extraction, parameter changes of the carrier curve, and
the classical eight-cusp quartic family.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from math import isqrt

from . import linalg
from .polyring import QQ, DivisionError, Polynomial, PolyRing

SURFACE_VARS = ("x0", "x1", "x2", "x3")
PARAM_VARS = ("t0", "t1")


def surface_ring(order="grevlex"):
    """The projective coordinate ring QQ[x0..x3]."""
    return PolyRing(SURFACE_VARS, QQ, order)


def param_ring(order="grevlex"):
    """The parameter ring QQ[t0, t1] of the carrier curve."""
    return PolyRing(PARAM_VARS, QQ, order)


class GeometryError(Exception):
    """Base class for construction errors."""


class DependentFormsError(GeometryError):
    """The two cube-root forms are linearly dependent."""


class DegenerateConfigurationError(GeometryError):
    """The four linear forms vanish along a line (coefficient rank <= 2)."""


class InfiniteIntersectionError(GeometryError):
    """The contact quadric contains a whole component of the carrier curve."""


# ---------------------------------------------------------------------------
# points and lines
# ---------------------------------------------------------------------------

class ProjectivePoint:
    """A rational projective point, normalized so equality is structural.

    Coordinates are stored scaled so that the first nonzero one equals 1;
    printing uses the primitive integer representative.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if all(c == 0 for c in coords):
            raise ValueError("projective point needs a nonzero coordinate")
        lead = next(c for c in coords if c != 0)
        self.coords = tuple(c / lead for c in coords)

    @property
    def dim(self):
        return len(self.coords)

    def integer_coords(self):
        return linalg.primitive_integer_vector(list(self.coords))

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __lt__(self, other):
        return self.coords < other.coords

    def __str__(self):
        return "(" + " : ".join(str(c) for c in self.integer_coords()) + ")"

    def __repr__(self):
        return f"ProjectivePoint{self.integer_coords()}"


@dataclass(frozen=True)
class Line:
    """A projective line given by two spanning points and canonical equations."""

    point_a: ProjectivePoint
    point_b: ProjectivePoint
    equations: tuple

    @staticmethod
    def through(point_a, point_b, ring):
        rows = [list(point_a.coords), list(point_b.coords)]
        if linalg.rank(rows) != 2:
            raise ValueError("coincident points do not span a line")
        basis = linalg.nullspace(rows)
        canonical, _ = linalg.rref(basis)
        forms = []
        for row in canonical:
            ints = linalg.primitive_integer_vector(row)
            forms.append(sum((ring.gen(i) * int(c) for i, c in enumerate(ints)),
                             ring.zero()))
        return Line(point_a, point_b, tuple(forms))

    def parametrize(self, s, t):
        """Points s*A + t*B with exact scalars."""
        a, b = self.point_a.coords, self.point_b.coords
        return tuple(Fraction(s) * x + Fraction(t) * y for x, y in zip(a, b))

    def __str__(self):
        return "{ " + " = ".join(str(f) for f in self.equations) + " = 0 }"


# ---------------------------------------------------------------------------
# configuration and family
# ---------------------------------------------------------------------------

class ConfigurationType(Enum):
    TWISTED_CUBIC = "I"       # the four forms have no common zero
    CONCURRENT_LINES = "II"   # the four planes meet in one point


@dataclass(frozen=True)
class Configuration:
    kind: ConfigurationType
    vertex: ProjectivePoint | None = None
    lines: tuple | None = None


@dataclass(frozen=True)
class DivisibleFamily:
    """Input forms plus every derived surface of the construction.

    lp, lpp are the linear forms whose cubes start the contact cubics,
    fp, fpp the companion linear forms, residual the quadric divided out of
    the sextic.  All derived data is exact and canonical.
    """

    lp: Polynomial
    lpp: Polynomial
    fp: Polynomial
    fpp: Polynomial
    residual: Polynomial
    cubic_a: Polynomial
    cubic_b: Polynomial
    contact_quadric: Polynomial
    q12: Polynomial
    q21: Polynomial
    q22: Polynomial
    sextic: Polynomial
    quartic: Polynomial

    @property
    def ring(self):
        return self.lp.ring

    def forms(self):
        return (self.lp, self.lpp, self.fp, self.fpp)


def _require_linear_form(f, label):
    if f.is_zero() or f.degree() != 1 or not f.is_homogeneous():
        raise GeometryError(f"{label} must be a nonzero linear form")


def _require_quadric(f, label, allow_zero=False):
    if f.is_zero():
        if allow_zero:
            return
        raise GeometryError(f"{label} must be a nonzero quadric")
    if f.degree() != 2 or not f.is_homogeneous():
        raise GeometryError(f"{label} must be homogeneous of degree 2")


def linear_coefficients(f):
    """Coefficient vector of a linear form."""
    n = f.ring.nvars
    unit = lambda i: tuple(1 if j == i else 0 for j in range(n))
    return [f.coefficient(unit(i)) for i in range(n)]


def _check_form_family(lp, lpp, fp, fpp):
    ring = lp.ring
    for f, label in ((lp, "lp"), (lpp, "lpp"), (fp, "fp"), (fpp, "fpp")):
        if f.ring != ring:
            raise GeometryError("all forms must share one ring")
        _require_linear_form(f, label)
    if ring.nvars != 4:
        raise GeometryError("the construction lives in 4 projective variables")
    if linalg.rank([linear_coefficients(lp), linear_coefficients(lpp)]) != 2:
        raise DependentFormsError("lp and lpp are linearly dependent")
    return ring


def ideal_quadrics(lp, lpp, fp, fpp):
    """The three quadrics cutting the carrier curve of the configuration."""
    _check_form_family(lp, lpp, fp, fpp)
    q12 = lp * fpp - lpp * lpp
    q21 = lpp * fp - lp * lp
    q22 = fp * fpp - lp * lpp
    return q12, q21, q22


def determinantal_quartic(s, q12, q21, q22):
    """det of [[s, q12], [q21, q22 - s]], the quartic's second equation."""
    for f, label in ((s, "s"), (q12, "q12"), (q21, "q21"), (q22, "q22")):
        _require_quadric(f, label, allow_zero=True)
    return s * (q22 - s) - q12 * q21


def build_family(lp, lpp, fp, fpp, residual):
    """Populate the full family; the exact division never fails (identity)."""
    ring = _check_form_family(lp, lpp, fp, fpp)
    if residual.ring != ring:
        raise GeometryError("residual quadric must share the forms' ring")
    _require_quadric(residual, "residual")
    cubic_a = lp ** 3 + fp * residual
    cubic_b = lpp ** 3 + fpp * residual
    contact = residual + lp * lpp
    q12, q21, q22 = ideal_quadrics(lp, lpp, fp, fpp)
    sextic = cubic_a * cubic_b - contact ** 3
    try:
        quartic = sextic.exact_divide(residual)
    except DivisionError as exc:  # impossible by the determinantal identity
        raise AssertionError("internal error: sextic not divisible by residual") from exc
    if quartic.degree() != 4:
        raise GeometryError("degenerate family: the quartic has degree "
                            f"{quartic.degree()}")
    return DivisibleFamily(lp, lpp, fp, fpp, residual, cubic_a, cubic_b,
                           contact, q12, q21, q22, sextic, quartic)


def classify_configuration(lp, lpp, fp, fpp):
    """Type I (carrier is a twisted cubic) or type II (cone vertex)."""
    _check_form_family(lp, lpp, fp, fpp)
    rows = [linear_coefficients(f) for f in (lp, lpp, fp, fpp)]
    r = linalg.rank(rows)
    if r == 4:
        return Configuration(ConfigurationType.TWISTED_CUBIC)
    if r == 3:
        kernel = linalg.nullspace(rows)
        vertex = ProjectivePoint(kernel[0])
        return Configuration(ConfigurationType.CONCURRENT_LINES, vertex=vertex)
    raise DegenerateConfigurationError(
        f"the four forms vanish on a positive-dimensional set (rank {r})")


# ---------------------------------------------------------------------------
# univariate helpers (dense Fraction lists, ascending degree)
# ---------------------------------------------------------------------------

def _uni_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _uni_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    while len(a) >= len(b) and _uni_trim(a):
        if len(a) < len(b):
            break
        f = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = f
        for i, bc in enumerate(b):
            a[shift + i] -= f * bc
        a.pop()
        _uni_trim(a)
    return _uni_trim(q), _uni_trim(a)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d <= isqrt(n):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _uni_eval(c, x):
    acc = Fraction(0)
    for k in reversed(c):
        acc = acc * x + k
    return acc


def _uni_rational_roots(coeffs):
    """All rational roots of a dense univariate polynomial (each once)."""
    c = _uni_trim([Fraction(x) for x in coeffs])
    if not c or len(c) == 1:
        return []
    roots = []
    while c[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        c = c[1:]
    if len(c) <= 1:
        return roots
    den = 1
    for x in c:
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            if _gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and _uni_eval(c, cand) == 0:
                    roots.append(cand)
    return roots


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _strip_rational_roots(coeffs):
    """Divide out every rational root; returns (roots with multiplicity, rest)."""
    c = _uni_trim([Fraction(x) for x in coeffs])
    found = []
    for r in _uni_rational_roots(c):
        while len(c) > 1 and _uni_eval(c, r) == 0:
            c, rem = _uni_divmod(c, [-r, Fraction(1)])
            assert not rem
            found.append(r)
    return found, c


def binary_form_roots(form):
    """Projective roots of a binary form plus unresolved root-free factors.

    Returns (roots, unresolved): roots are (t0, t1) fraction pairs, each
    distinct root once; unresolved is a tuple of binary forms (same ring)
    without rational roots, never approximated.
    """
    if form.is_zero():
        raise ValueError("zero binary form")
    ring = form.ring
    if ring.nvars != 2 or not form.is_homogeneous():
        raise ValueError("expected a homogeneous binary form")
    d = form.degree()
    coeffs = [Fraction(0)] * (d + 1)
    for (e0, e1), c in form.terms:
        coeffs[e0] = c
    roots = []
    if coeffs[d] == 0:
        roots.append((Fraction(1), Fraction(0)))  # the point at t1 = 0
    finite, rest = _strip_rational_roots(coeffs)
    for r in dict.fromkeys(finite):
        roots.append((r, Fraction(1)))
    unresolved = ()
    if len(rest) > 1:
        deg = len(rest) - 1
        leftover = {(i, deg - i): c for i, c in enumerate(rest) if c != 0}
        unresolved = (ring.from_dict(leftover),)
    return roots, unresolved


# ---------------------------------------------------------------------------
# cusp search
# ---------------------------------------------------------------------------

def twisted_cubic_map(pring=None):
    """The degree-3 parametrization (t0^2 t1, t0 t1^2, t0^3, t1^3)."""
    pring = pring or param_ring()
    t0, t1 = pring.gens()
    return (t0 * t0 * t1, t0 * t1 * t1, t0 ** 3, t1 ** 3)


@dataclass(frozen=True)
class CuspSearch:
    points: tuple
    unresolved: tuple
    configuration: Configuration
    binary_form: Polynomial | None = None
    lines: tuple | None = None


def _verify_on_curve(family, point):
    for f in (family.contact_quadric, family.q12, family.q21, family.q22,
              family.quartic):
        value = f.evaluate(point.coords)
        if value != 0:
            raise AssertionError(f"internal error: candidate {point} misses "
                                 f"{f} (value {value})")


def cusp_candidates(family, config=None, slice_form=None):
    """Exact intersection of the contact quadric with the carrier curve.

    Type I: pull the quadric back along the twisted-cubic parametrization
    (after the linear change sending (lp, lpp, fp, fpp) to the coordinates)
    and read off rational roots of the resulting binary sextic.  Type II:
    slice the cone to find its lines, then intersect each line with the
    quadric.  Irrational intersections stay symbolic in ``unresolved``.
    """
    if config is None:
        config = classify_configuration(*family.forms())
    if config.kind is ConfigurationType.TWISTED_CUBIC:
        return _cusps_twisted_cubic(family, config)
    return _cusps_concurrent_lines(family, config, slice_form)


def _cusps_twisted_cubic(family, config):
    ring = family.ring
    rows = [linear_coefficients(f) for f in family.forms()]
    inverse = linalg.inverse(rows)
    gens = ring.gens()
    adapted = [sum((gens[j] * inverse[i][j] for j in range(4)), ring.zero())
               for i in range(4)]
    pring = param_ring()
    phi = twisted_cubic_map(pring)
    binary = family.contact_quadric.substitute(adapted).substitute(phi)
    if binary.is_zero():
        raise InfiniteIntersectionError(
            "the contact quadric vanishes on the whole carrier curve")
    roots, unresolved = binary_form_roots(binary)
    points = []
    for t0v, t1v in roots:
        image = [p.evaluate((t0v, t1v)) for p in phi]
        coords = linalg.mat_vec(inverse, image)
        point = ProjectivePoint(coords)
        _verify_on_curve(family, point)
        points.append(point)
    points.sort()
    return CuspSearch(tuple(points), unresolved, config, binary_form=binary)


def cone_lines(q12, q21, q22, vertex, slice_form=None):
    """Rational lines of the cone cut by the three quadrics.

    The cone is sliced with a hyperplane missing the vertex (default: the
    coordinate hyperplane x_i = 0 where i is the vertex's leading nonzero
    coordinate); each rational point of the zero-dimensional slice spans a
    line with the vertex.  Returns (lines, unresolved factors).
    """
    ring = q12.ring
    if slice_form is None:
        lead = next(i for i, c in enumerate(vertex.coords) if c != 0)
        slice_form = ring.gen(lead)
    if slice_form.evaluate(vertex.coords) == 0:
        raise GeometryError("slice hyperplane passes through the vertex")
    plane_basis = linalg.nullspace([linear_coefficients(slice_form)])
    zring = PolyRing(("z0", "z1", "z2"), QQ, "lex")
    zgens = zring.gens()
    embed = []
    for i in range(4):
        embed.append(sum((zgens[k] * plane_basis[k][i] for k in range(3)),
                         zring.zero()))
    restricted = [q.substitute(embed) for q in (q12, q21, q22)]
    sols, unresolved = _projective_plane_solutions(restricted, zring)
    lines = []
    for z in sols:
        coords = [sum(plane_basis[k][i] * z[k] for k in range(3)) for i in range(4)]
        point = ProjectivePoint(coords)
        line = Line.through(vertex, point, ring)
        for q in (q12, q21, q22):
            if not _vanishes_on_line(q, line):
                raise AssertionError("internal error: slice point spans a line "
                                     "not contained in the cone")
        lines.append(line)
    lines.sort(key=lambda l: tuple(l.point_b.coords))
    return tuple(lines), tuple(unresolved)


def _vanishes_on_line(f, line):
    pring = param_ring()
    t0, t1 = pring.gens()
    images = [t0 * a + t1 * b
              for a, b in zip(line.point_a.coords, line.point_b.coords)]
    return f.substitute(images).is_zero()


def _projective_plane_solutions(polys, zring):
    """Rational projective solutions of homogeneous equations in P^2."""
    points, unresolved = [], []
    z0, z1, z2 = zring.gens()
    one = zring.one()
    # chart z0 = 1
    aff = [p.substitute((one, z1, z2)) for p in polys]
    sols, extra = _affine_plane_solutions(aff, zring, (1, 2))
    points += [(Fraction(1), a, b) for a, b in sols]
    unresolved += extra
    # chart z0 = 0, z1 = 1
    uni = [p.substitute((zring.zero(), one, z2)) for p in polys]
    sols1, extra1 = _common_univariate_roots(uni, 2)
    points += [(Fraction(0), Fraction(1), r) for r in sols1]
    unresolved += extra1
    # the point (0 : 0 : 1)
    if all(p.evaluate((0, 0, 1)) == 0 for p in polys):
        points.append((Fraction(0), Fraction(0), Fraction(1)))
    return points, unresolved


def _affine_plane_solutions(polys, zring, var_indices):
    """Solve a zero-dimensional system in two affine variables."""
    from .groebner import Ideal, buchberger

    i1, i2 = var_indices
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise InfiniteIntersectionError("slice system vanishes identically")
    basis = buchberger(Ideal(nonzero))
    if any(sum(g.leading_monomial()) == 0 for g in basis):
        return [], []
    eliminant = None
    for g in basis.polys:
        if all(m[i1] == 0 for m, _ in g.terms):
            eliminant = [Fraction(0)] * (g.degree() + 1)
            for m, c in g.terms:
                eliminant[m[i2]] = c
            break
    if eliminant is None:
        raise GeometryError("slice system is not zero-dimensional")
    roots2, rest2 = _strip_rational_roots(eliminant)
    unresolved = []
    if len(rest2) > 1:
        unresolved.append(_univariate_poly(rest2, "w"))
    solutions = []
    for r2 in dict.fromkeys(roots2):
        subs_images = list(zring.gens())
        subs_images[i2] = zring.constant(r2)
        reduced1 = []
        for g in basis.polys:
            h = g.substitute(tuple(subs_images))
            if not h.is_zero():
                reduced1.append(_dense_in_var(h, i1))
        if not reduced1:
            raise GeometryError("slice system is not zero-dimensional")
        g1 = reduced1[0]
        for other in reduced1[1:]:
            g1 = _uni_gcd(g1, other)
        if len(g1) == 0:
            raise GeometryError("slice system is not zero-dimensional")
        roots1, rest1 = _strip_rational_roots(g1)
        if len(rest1) > 1:
            unresolved.append(_univariate_poly(rest1, "w"))
        for r1 in dict.fromkeys(roots1):
            solutions.append((r1, r2))
    return solutions, unresolved


def _common_univariate_roots(polys, var_index):
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise InfiniteIntersectionError("slice system vanishes identically")
    g = _dense_in_var(nonzero[0], var_index)
    for p in nonzero[1:]:
        g = _uni_gcd(g, _dense_in_var(p, var_index))
    if len(g) == 0:
        raise GeometryError("slice system is not zero-dimensional")
    roots, rest = _strip_rational_roots(g)
    unresolved = []
    if len(rest) > 1:
        unresolved.append(_univariate_poly(rest, "w"))
    return list(dict.fromkeys(roots)), unresolved


def _dense_in_var(poly, var_index):
    coeffs = [Fraction(0)] * (poly.degree() + 1)
    for m, c in poly.terms:
        if any(e != 0 for i, e in enumerate(m) if i != var_index):
            raise ValueError("polynomial is not univariate in the given variable")
        coeffs[m[var_index]] = c
    return _uni_trim(coeffs)


def _uni_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _uni_divmod(a, b)
        a, b = b, r
    if a:
        inv = 1 / a[-1]
        a = [c * inv for c in a]
    return a


def _univariate_poly(coeffs, name):
    ring = PolyRing((name,), QQ, "lex")
    return ring.from_dict({(i,): c for i, c in enumerate(coeffs)})


def _cusps_concurrent_lines(family, config, slice_form):
    lines, unresolved = cone_lines(family.q12, family.q21, family.q22,
                                   config.vertex, slice_form)
    unresolved = list(unresolved)
    pring = param_ring()
    t0, t1 = pring.gens()
    points = []
    for line in lines:
        images = [t0 * a + t1 * b
                  for a, b in zip(line.point_a.coords, line.point_b.coords)]
        restricted = family.contact_quadric.substitute(images)
        if restricted.is_zero():
            raise InfiniteIntersectionError(
                "the contact quadric contains a line of the carrier cone")
        roots, extra = binary_form_roots(restricted)
        unresolved += list(extra)
        for s, t in roots:
            point = ProjectivePoint(line.parametrize(s, t))
            _verify_on_curve(family, point)
            points.append(point)
    points = sorted(set(points))
    config = replace(config, lines=lines)
    return CuspSearch(tuple(points), tuple(unresolved), config, lines=lines)


# ---------------------------------------------------------------------------
# parameter change of the carrier curve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiberChange:
    forms: tuple          # (lpp_a, lp_a, fpp_a, fp_a), the induced components
    quadric: Polynomial   # the transformed contact quadric Q(a)
    verified: bool
    induced: tuple        # the four linear components of the coordinate map


def fiber_change(family, a):
    """Transform the family's determinantal matrix by a parameter change.

    ``a`` is an invertible 2x2 rational matrix acting on (t0, t1).  Requires
    the family in curve-adapted coordinates (forms equal to the coordinate
    functions).  The 2x2 matrix identity is verified entry by entry, exactly.
    """
    ring = family.ring
    gens = ring.gens()
    if family.forms() != gens:
        raise GeometryError("fiber_change needs the curve-adapted family "
                            "(forms equal to the coordinates)")
    (a00, a01), (a10, a11) = [[Fraction(x) for x in row] for row in a]
    det = a00 * a11 - a01 * a10
    if det == 0:
        raise GeometryError("parameter change matrix is singular")
    pring = param_ring()
    t0, t1 = pring.gens()
    u = t0 * a00 + t1 * a01
    v = t0 * a10 + t1 * a11
    components = (u * u * v, u * v * v, u ** 3, v ** 3)
    # write each cubic in the basis (t0^2 t1, t0 t1^2, t0^3, t1^3) = (x0..x3)
    basis_exps = ((2, 1), (1, 2), (3, 0), (0, 3))
    induced = []
    for comp in components:
        induced.append(sum((gens[j] * comp.coefficient(basis_exps[j])
                            for j in range(4)), ring.zero()))
    lpp_a, lp_a, fpp_a, fp_a = induced
    q12_a = lp_a * fpp_a - lpp_a * lpp_a
    q21_a = lpp_a * fp_a - lp_a * lp_a
    q22_a = fp_a * fpp_a - lp_a * lpp_a
    s = family.contact_quadric
    m = ((s, family.q12), (family.q21, family.q22 - s))
    a1 = ((a01, a00), (a11, a10))
    a2 = ((a10, a00), (a11, a01))
    prod = [[ring.zero(), ring.zero()], [ring.zero(), ring.zero()]]
    for i in range(2):
        for j in range(2):
            acc = ring.zero()
            for k in range(2):
                for l in range(2):
                    acc = acc + m[k][l] * (a1[i][k] * a2[l][j])
            prod[i][j] = acc
    d2 = det * det
    quadric = prod[1][1] * d2
    verified = (prod[0][1] * d2 == q12_a
                and prod[1][0] * d2 == q21_a
                and prod[0][0] * d2 == q22_a - quadric)
    return FiberChange((lpp_a, lp_a, fpp_a, fp_a), quadric, verified,
                       tuple(induced))


# ---------------------------------------------------------------------------
# the eight-cusp family and the worked examples
# ---------------------------------------------------------------------------

def eight_cusp_quartic(k, ring=None):
    """The classical one-parameter quartic with eight singular points."""
    k = Fraction(k)
    if k == 0:
        raise ValueError("the family needs k != 0")
    ring = ring or surface_ring()
    x0, x1, x2, x3 = ring.gens()
    lead = (x0 * x0 * x1 * x1) * (1 + k) ** 3 \
        + (x0 * x1 * x2 * x3) * (2 * k * (1 - k * k)) \
        - (x2 * x2 * x3 * x3) * (1 - k) ** 3
    tail = (x0 + x1 + x2 + x3) * (x2 * x3 * (x0 + x1) * (1 - k)
                                  - x0 * x1 * (x2 + x3) * (1 + k)) \
        * (1 - k) ** 2
    return lead + tail


def eight_cusp_points():
    """The eight singular points, in their customary labelling P1..P8."""
    data = [(1, 0, -1, 0), (1, 0, 0, -1), (0, 1, -1, 0), (0, 1, 0, -1),
            (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    return tuple(ProjectivePoint(p) for p in data)


def twisted_cubic_example(ring=None):
    """The worked type (I) family: six cusps on a twisted cubic."""
    ring = ring or surface_ring()
    x0, x1, x2, x3 = ring.gens()
    s = x1 * x1 * 49 + x2 * x2 - x3 * x3 * 36 - x0 * x0 * 14
    return build_family(x0, x1, x2, x3, s - x0 * x1)


def concurrent_lines_example(ring=None):
    """The worked type (II) family: six cusps on three concurrent lines."""
    ring = ring or surface_ring()
    x0, x1, x2, x3 = ring.gens()
    fpp = (x1 + x2) * 6 - x0 * 11
    residual = x3 * x3 - x2 * x2 - x0 * x1
    return build_family(x0, x1, x2, fpp, residual)


# ---------------------------------------------------------------------------
# manifests
# ---------------------------------------------------------------------------

MANIFEST_KEYS = ("Lp", "Lpp", "Fp", "Fpp", "R")


def family_to_manifest(family):
    values = (family.lp, family.lpp, family.fp, family.fpp, family.residual)
    return "".join(f"{k} = {v}\n" for k, v in zip(MANIFEST_KEYS, values))


def family_from_manifest(text, ring=None):
    """Parse a five-line manifest (``key = polynomial``, '#' comments)."""
    ring = ring or surface_ring()
    found = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GeometryError(f"manifest line {lineno}: expected 'key = polynomial'")
        key, _, rhs = line.partition("=")
        key = key.strip()
        if key not in MANIFEST_KEYS:
            raise GeometryError(f"manifest line {lineno}: unknown key {key!r}")
        if key in found:
            raise GeometryError(f"manifest line {lineno}: duplicate key {key!r}")
        found[key] = ring.parse(rhs.strip())
    missing = [k for k in MANIFEST_KEYS if k not in found]
    if missing:
        raise GeometryError(f"manifest is missing keys: {', '.join(missing)}")
    return build_family(found["Lp"], found["Lpp"], found["Fp"], found["Fpp"],
                        found["R"])
