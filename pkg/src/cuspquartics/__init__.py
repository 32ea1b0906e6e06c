"""Exact-arithmetic toolkit for quartic surfaces with three-divisible cusps.

Layers: ``polyring`` (canonical sparse polynomials over QQ and prime
fields), ``groebner`` (reduced bases, normal forms, membership),
``geometry`` (determinantal quartic families and cusp search), ``singular``
(local classification and certificates), ``codes`` (ternary constant-weight
codes and the support-family search), and ``cli`` (scriptable front end).
"""

from .polyring import (
    GF,
    QQ,
    DivisionError,
    ExponentOverflowError,
    ParseError,
    Polynomial,
    PolyRing,
    RingMismatchError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    ideal_membership,
    is_zero_dimensional_affine,
    normal_form,
    radical_membership,
    s_polynomial,
)
from .geometry import (
    Configuration,
    ConfigurationType,
    CuspSearch,
    DependentFormsError,
    DivisibleFamily,
    GeometryError,
    InfiniteIntersectionError,
    Line,
    ProjectivePoint,
    build_family,
    classify_configuration,
    concurrent_lines_example,
    cusp_candidates,
    determinantal_quartic,
    eight_cusp_points,
    eight_cusp_quartic,
    family_from_manifest,
    family_to_manifest,
    fiber_change,
    ideal_quadrics,
    param_ring,
    surface_ring,
    twisted_cubic_example,
    twisted_cubic_map,
)
from .singular import (
    Certificate,
    CertificateError,
    SingularityKind,
    SingularityVerdict,
    classify,
    cusp_divisibility_certificate,
    forms_through_points,
    is_singular_point,
    jacobian_ideal,
    singular_locus_contained_in,
    singular_set_certificate,
    transversal_at,
)
from .codes import (
    CuspConfiguration,
    TernaryCode,
    configuration_from_coordinate_swaps,
    coplanar_subsets,
    eight_cusp_code,
    enumerate_constant_weight_codes,
    enumerate_divisible_families,
    griesmer_holds,
    is_constant_weight,
    weight,
)

__version__ = "0.1.0"
