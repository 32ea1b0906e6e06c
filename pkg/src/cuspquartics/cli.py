"""Command-line front end: constructions, certificates and reports.

Subcommands: gb, nf, construct, verify-example, cusps, code, enumerate-sets.
Every run produces a report that renders as text or JSON
({command, inputs, results, warnings, verified, elapsed_ms}); the process
exits 0 on verified success, 1 on verification failure, 2 on input errors
and 3 on precondition violations.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import codes, geometry, singular
from .geometry import (
    ConfigurationType,
    DependentFormsError,
    DegenerateConfigurationError,
    GeometryError,
    InfiniteIntersectionError,
    ProjectivePoint,
)
from .groebner import Ideal, buchberger, normal_form
from .polyring import ParseError, PolyRing, PolynomialError, QQ
from .singular import CertificateError, SingularityKind

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

DEFAULT_SEED = 20250809


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _new_report(command, inputs):
    return {"command": command, "inputs": inputs, "results": [],
            "warnings": [], "verified": True, "elapsed_ms": 0}


def _add(report, name, ok, **data):
    entry = {"name": name, "status": "pass" if ok else "FAIL"}
    entry.update(data)
    report["results"].append(entry)
    if not ok:
        report["verified"] = False
    return ok


def _info(report, name, **data):
    entry = {"name": name, "status": "info"}
    entry.update(data)
    report["results"].append(entry)


def _warn(report, message, **evidence):
    entry = {"message": message}
    entry.update(evidence)
    report["warnings"].append(entry)


def _render(report, as_json, stream=None):
    stream = stream or sys.stdout
    if as_json:
        print(json.dumps(report, indent=2, default=str), file=stream)
        return
    print(f"command: {report['command']}", file=stream)
    for key, value in report["inputs"].items():
        print(f"  input {key}: {value}", file=stream)
    for entry in report["results"]:
        rest = {k: v for k, v in entry.items() if k not in ("name", "status")}
        detail = "  ".join(f"{k}={v}" for k, v in rest.items())
        print(f"  [{entry['status']:>4}] {entry['name']}  {detail}".rstrip(),
              file=stream)
    for w in report["warnings"]:
        rest = {k: v for k, v in w.items() if k != "message"}
        detail = "  ".join(f"{k}={v}" for k, v in rest.items())
        print(f"  [WARN] {w['message']}  {detail}".rstrip(), file=stream)
    status = "VERIFIED" if report["verified"] else "FAILED"
    print(f"{status} in {report['elapsed_ms']} ms", file=stream)


def _ring_from(names, order):
    return PolyRing(tuple(n.strip() for n in names.split(",") if n.strip()),
                    QQ, order)


def _parse_generators(text, ring):
    polys = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        polys.append(ring.parse(chunk))
    if not polys:
        raise InputError("no generators given")
    return polys


# ---------------------------------------------------------------------------
# subcommand pipelines
# ---------------------------------------------------------------------------

def report_gb(gens_text, order, var_names):
    ring = _ring_from(var_names, order)
    report = _new_report("gb", {"generators": gens_text, "order": order,
                                "variables": ring.variables})
    try:
        gens = _parse_generators(gens_text, ring)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    basis = buchberger(Ideal.spanned_by(gens, ring=ring))
    _info(report, "reduced basis", size=len(basis),
          elements=[str(g) for g in basis])
    _add(report, "s-polynomial audit", basis.verify_buchberger_criterion())
    return report


def report_nf(gens_text, poly_text, order, var_names):
    ring = _ring_from(var_names, order)
    report = _new_report("nf", {"generators": gens_text, "polynomial": poly_text,
                                "order": order})
    try:
        gens = _parse_generators(gens_text, ring)
        g = ring.parse(poly_text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    basis = buchberger(Ideal.spanned_by(gens, ring=ring))
    r = normal_form(g, basis)
    _info(report, "normal form", remainder=str(r), basis_size=len(basis),
          in_ideal=r.is_zero())
    return report


def _load_family(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read manifest: {exc}") from exc
    try:
        return geometry.family_from_manifest(text), text
    except ParseError as exc:
        raise InputError(str(exc)) from exc
    except (DependentFormsError, DegenerateConfigurationError) as exc:
        raise PreconditionError(str(exc)) from exc
    except GeometryError as exc:
        raise InputError(str(exc)) from exc


def report_construct(path, certify, pmax):
    family, text = _load_family(path)
    report = _new_report("construct", {"manifest": path, "pmax": pmax})
    _info(report, "quartic", polynomial=str(family.quartic))
    config = geometry.classify_configuration(*family.forms())
    _info(report, "configuration", type=config.kind.value,
          vertex=str(config.vertex) if config.vertex else None)
    search = geometry.cusp_candidates(family, config)
    _info(report, "cusp candidates", points=[str(p) for p in search.points],
          unresolved=[str(u) for u in search.unresolved])
    if search.lines:
        _info(report, "carrier lines", lines=[str(l) for l in search.lines])
    if certify:
        _run_certificates(report, family, search, pmax)
    return report


def report_cusps(path):
    family, _ = _load_family(path)
    report = _new_report("cusps", {"manifest": path})
    config = geometry.classify_configuration(*family.forms())
    search = geometry.cusp_candidates(family, config)
    _info(report, "configuration", type=config.kind.value)
    _info(report, "cusp candidates", points=[str(p) for p in search.points],
          unresolved=[str(u) for u in search.unresolved])
    for point in search.points:
        verdict = singular.classify(family.quartic, point)
        _info(report, f"classification {point}", kind=verdict.kind.value)
    return report


def _run_certificates(report, family, search, pmax):
    basis = buchberger(singular.jacobian_ideal(family.quartic))
    _info(report, "jacobian groebner basis", size=len(basis))
    named = (("q12", family.q12), ("q21", family.q21), ("q22", family.q22),
             ("contact quadric", family.contact_quadric))
    for label, g in named:
        cert = singular.singular_locus_contained_in(family.quartic, g, pmax, basis)
        _add(report, f"singular locus inside {label}", cert.verified,
             exponent=cert.data["exponent"])
    all_a2 = True
    for point in search.points:
        verdict = singular.classify(family.quartic, point)
        ok = verdict.kind is SingularityKind.A2
        all_a2 = all_a2 and ok
        _add(report, f"cusp {point}", ok, kind=verdict.kind.value)
    if all_a2 and search.points:
        cert = singular.cusp_divisibility_certificate(family, search.points)
        _add(report, "three-divisibility certificate", cert.verified)
        full = singular.singular_set_certificate(family, search, pmax, basis)
        _add(report, "no extra singularities", full.verified,
             exponents=full.data["exponents"])


def report_code(length, generators_text, griesmer_claims):
    report = _new_report("code", {"length": length,
                                  "generators": generators_text})
    words = []
    for chunk in generators_text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            word = tuple(int(v) for v in chunk.replace(",", " ").split())
        except ValueError as exc:
            raise InputError(f"bad word {chunk!r}") from exc
        words.append(word)
    if not words:
        raise InputError("no generator words given")
    try:
        code = codes.TernaryCode(length, words)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    dist = code.weight_distribution()
    _info(report, "code", dimension=code.dimension,
          weight_distribution={str(k): v for k, v in sorted(dist.items())},
          supports=sorted(sorted(s) for s in code.supports()))
    nonzero = sorted(k for k in dist if k > 0)
    if len(nonzero) == 1:
        _info(report, "constant weight", r=nonzero[0])
        griesmer_claims = list(griesmer_claims) + [(length, code.dimension,
                                                    nonzero[0])]
    for q, d, r in griesmer_claims:
        _info(report, f"griesmer bound for [{q},{d},{{{r}}}]",
              holds=codes.griesmer_holds(q, d, r))
    return report


def report_enumerate_sets():
    report = _new_report("enumerate-sets", {"configuration": "eight-cusp quartic"})
    points = geometry.eight_cusp_points()
    config = codes.configuration_from_coordinate_swaps(points)
    _info(report, "points", points=[str(p) for p in points])
    _info(report, "orbits", orbits=config.orbits())
    families = codes.enumerate_divisible_families(config)
    _info(report, "support families",
          count=len(families), families=[list(map(list, f)) for f in families])
    return report


# ---------------------------------------------------------------------------
# worked-example verification
# ---------------------------------------------------------------------------

def report_verify_example(name, k, pmax):
    if name == "ex61":
        return _verify_twisted_cubic(pmax)
    if name == "ex62":
        return _verify_concurrent_lines(pmax)
    if name == "barth":
        return _verify_eight_cusp(k)
    raise InputError(f"unknown example {name!r} (expected ex61, ex62 or barth)")


def _verify_twisted_cubic(pmax):
    report = _new_report("verify-example", {"name": "ex61", "pmax": pmax})
    family = geometry.twisted_cubic_example()
    _info(report, "quartic", polynomial=str(family.quartic))
    det_route = geometry.determinantal_quartic(
        family.contact_quadric, family.q12, family.q21, family.q22)
    _add(report, "determinantal equation agrees with exact division",
         det_route == family.quartic)
    config = geometry.classify_configuration(*family.forms())
    _add(report, "configuration is type I",
         config.kind is ConfigurationType.TWISTED_CUBIC)
    search = geometry.cusp_candidates(family, config)
    expected = sorted(ProjectivePoint((j * j, s * j, s * j ** 3, 1))
                      for j in (1, 2, 3) for s in (1, -1))
    _add(report, "six rational cusps found",
         list(search.points) == expected and not search.unresolved,
         points=[str(p) for p in search.points])
    roots, extra = geometry.binary_form_roots(search.binary_form)
    root_set = {(t0, t1) for t0, t1 in roots}
    _add(report, "pullback roots are (+-1, +-2, +-3)",
         not extra and root_set == {(Fraction(t), Fraction(1))
                                    for t in (1, -1, 2, -2, 3, -3)})
    _report_printed_coordinate_warning(report, family)
    _common_cusp_checks(report, family, search)
    _run_certificates(report, family, search, pmax)
    return report


def _report_printed_coordinate_warning(report, family):
    """The source prints the cusps as (+-j : j : j^3 : +-1); only j = 1 fits."""
    bad = []
    for j in (1, 2, 3):
        for s in (1, -1):
            point = (s * j, j, j ** 3, s)
            value = family.contact_quadric.evaluate(point)
            if value != 0:
                bad.append({"point": str(ProjectivePoint(point)),
                            "contact_quadric_value": str(value)})
    if bad:
        _warn(report,
              "suspected misprint in the printed cusp coordinates: the "
              "derived points (j^2 : +-j : +-j^3 : 1) satisfy all defining "
              "equations, the printed (+-j : j : j^3 : +-1) do not",
              failing_printed_points=bad)


def _common_cusp_checks(report, family, search):
    kinds = [singular.classify(family.quartic, p) for p in search.points]
    _add(report, "every cusp classifies as A2",
         all(v.kind is SingularityKind.A2 for v in kinds),
         verdicts=[v.kind.value for v in kinds])
    _add(report, "contact surfaces meet transversally at every cusp",
         all(singular.transversal_at(family.cubic_a, family.cubic_b,
                                     family.contact_quadric, p)
             for p in search.points))
    _add(report, "residual quadric vanishes at no cusp",
         all(family.residual.evaluate(p.coords) != 0 for p in search.points))


def _verify_concurrent_lines(pmax):
    report = _new_report("verify-example", {"name": "ex62", "pmax": pmax})
    family = geometry.concurrent_lines_example()
    ring = family.ring
    x0, x1, x2, x3 = ring.gens()
    _add(report, "residual quadric is x3^2 - x2^2 - x0*x1",
         family.residual == x3 * x3 - x2 * x2 - x0 * x1)
    _add(report, "contact quadric is x3^2 - x2^2",
         family.contact_quadric == x3 * x3 - x2 * x2)
    config = geometry.classify_configuration(*family.forms())
    vertex_ok = (config.kind is ConfigurationType.CONCURRENT_LINES
                 and config.vertex == ProjectivePoint((0, 0, 0, 1)))
    _add(report, "configuration is type II with vertex (0:0:0:1)", vertex_ok,
         vertex=str(config.vertex) if config.vertex else None)
    _add(report, "vertex does not lie on the quartic",
         family.quartic.evaluate(config.vertex.coords) != 0,
         value=str(family.quartic.evaluate(config.vertex.coords)))
    search = geometry.cusp_candidates(family, config)
    expected_lines = tuple(
        (str(x0 - x2 * j), str(x1 - x2 * (j * j))) for j in (1, 2, 3))
    got_lines = tuple(tuple(str(f) for f in line.equations)
                      for line in (search.lines or ()))
    _add(report, "carrier lines recovered", set(got_lines) == set(expected_lines),
         lines=[str(l) for l in (search.lines or ())])
    expected = sorted(ProjectivePoint((j, j * j, 1, s))
                      for j in (1, 2, 3) for s in (1, -1))
    _add(report, "six rational cusps (j : j^2 : 1 : +-1)",
         list(search.points) == expected and not search.unresolved,
         points=[str(p) for p in search.points])
    _common_cusp_checks(report, family, search)
    _run_certificates(report, family, search, pmax)
    return report


def _verify_eight_cusp(k):
    k = Fraction(k)
    report = _new_report("verify-example", {"name": "barth", "k": str(k)})
    if k == 0:
        raise PreconditionError("the eight-cusp family needs k != 0")
    surface = geometry.eight_cusp_quartic(k)
    points = geometry.eight_cusp_points()
    _add(report, "all eight points lie on the surface",
         all(surface.evaluate(p.coords) == 0 for p in points))
    _add(report, "all eight points are singular",
         all(singular.is_singular_point(surface, p) for p in points))
    verdicts = [singular.classify(surface, p) for p in points]
    _info(report, "classification verdicts",
          verdicts={str(p): v.kind.value for p, v in zip(points, verdicts)})
    a1_points = [str(p) for p, v in zip(points, verdicts)
                 if v.kind is SingularityKind.A1]
    if a1_points:
        det_value = _corner_quadratic_determinant(surface)
        formula = -(k / 2) * (1 + k) ** 2 * (1 - k) ** 6
        _warn(report,
              "the printed polynomial makes the coordinate points ordinary "
              "double points (rank-3 quadratic part), not cusps; suspected "
              "transcription issue in the source",
              a1_points=a1_points,
              determinant_at_1000=str(det_value),
              desk_formula_value=str(formula),
              formulas_agree=det_value == formula)
    code = codes.eight_cusp_code()
    dist = code.weight_distribution()
    _add(report, "code of an eight-cusp quartic is [8, 2, {6}]",
         code.dimension == 2 and dist == {0: 1, 6: 8}
         and len(code.supports()) == 4,
         weight_distribution={str(kk): v for kk, v in sorted(dist.items())})
    _add(report, "griesmer bound holds with equality for [8,2,6]",
         codes.griesmer_holds(8, 2, 6) and sum(-(-6 // 3 ** i)
                                               for i in range(2)) == 8)
    _add(report, "griesmer bound excludes [8,3,6]",
         not codes.griesmer_holds(8, 3, 6))
    config = codes.configuration_from_coordinate_swaps(points)
    families = codes.enumerate_divisible_families(config)
    expected_family = tuple(sorted(
        (tuple(range(1, 7)), (1, 2, 3, 4, 7, 8), (1, 4, 5, 6, 7, 8),
         (2, 3, 5, 6, 7, 8))))
    _add(report, "enumeration finds the four three-divisible sets",
         expected_family in families,
         families=[list(map(list, f)) for f in families])
    return report


def _corner_quadratic_determinant(surface):
    """det of the local quadratic form at (1:0:0:0), an exact cross-check."""
    from . import linalg
    _, pieces = singular.local_expansion(surface, ProjectivePoint((1, 0, 0, 0)))
    return linalg.det(singular.quadratic_form_matrix(pieces[2]))


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------

def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the report as JSON")
    common.add_argument("--order", choices=("grevlex", "lex", "grlex"),
                        default=argparse.SUPPRESS, help="term order")
    common.add_argument("--pmax", type=int, default=argparse.SUPPRESS,
                        help="cap for radical-membership exponents")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed echoed into the report (for scripted runs)")

    parser = argparse.ArgumentParser(
        prog="cuspquartics",
        description="exact constructions and certificates for cuspidal quartics")
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--order", choices=("grevlex", "lex", "grlex"),
                        default="grevlex")
    parser.add_argument("--pmax", type=int, default=8)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    p.add_argument("generators", nargs="?", default=None,
                   help="comma-separated polynomials")
    p.add_argument("--file", help="file with one generator per line")
    p.add_argument("--vars", default="x0,x1,x2,x3")

    p = sub.add_parser("nf", parents=[common], help="normal form")
    p.add_argument("generators")
    p.add_argument("polynomial")
    p.add_argument("--vars", default="x0,x1,x2,x3")

    p = sub.add_parser("construct", parents=[common],
                       help="build a family from a manifest")
    p.add_argument("manifest")
    p.add_argument("--certify", action="store_true")

    p = sub.add_parser("verify-example", parents=[common],
                       help="re-check a worked example")
    p.add_argument("name", choices=("ex61", "ex62", "barth"))
    p.add_argument("--k", default="2", help="parameter for the barth family")

    p = sub.add_parser("cusps", parents=[common],
                       help="cusp candidates of a manifest family")
    p.add_argument("manifest")

    p = sub.add_parser("code", parents=[common], help="ternary code report")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--generators", required=True,
                   help="semicolon-separated words, e.g. '1,1,0;0,1,-1'")
    p.add_argument("--griesmer", action="append", default=[],
                   metavar="Q,D,R", help="extra bound checks")

    sub.add_parser("enumerate-sets", parents=[common],
                   help="search three-divisible support families")
    return parser


def _dispatch(args):
    if args.subcommand == "gb":
        text = args.generators
        if args.file:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = ",".join(line.strip() for line in fh
                                if line.strip() and not line.startswith("#"))
        if not text:
            raise InputError("no generators given (inline or --file)")
        return report_gb(text, args.order, args.vars)
    if args.subcommand == "nf":
        return report_nf(args.generators, args.polynomial, args.order, args.vars)
    if args.subcommand == "construct":
        return report_construct(args.manifest, args.certify, args.pmax)
    if args.subcommand == "verify-example":
        return report_verify_example(args.name, args.k, args.pmax)
    if args.subcommand == "cusps":
        return report_cusps(args.manifest)
    if args.subcommand == "code":
        claims = []
        for claim in args.griesmer:
            try:
                q, d, r = (int(v) for v in claim.replace(",", " ").split())
            except ValueError as exc:
                raise InputError(f"bad griesmer claim {claim!r}") from exc
            claims.append((q, d, r))
        return report_code(args.length, args.generators, claims)
    if args.subcommand == "enumerate-sets":
        return report_enumerate_sets()
    raise InputError(f"unknown subcommand {args.subcommand!r}")


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report = _dispatch(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, PolynomialError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DependentFormsError, DegenerateConfigurationError,
            InfiniteIntersectionError, CertificateError,
            PreconditionError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GeometryError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report["elapsed_ms"] = int((time.monotonic() - started) * 1000)
    report["inputs"].setdefault("seed", args.seed)
    _render(report, args.json)
    return EXIT_OK if report["verified"] else EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
