"""The degenerate configuration: six cusps on three concurrent lines.

When the four linear forms share a common zero P, the carrier curve
degenerates into three lines through P, each holding exactly two cusps,
and P itself stays off the quartic.
"""

from cuspquartics import (
    classify,
    classify_configuration,
    concurrent_lines_example,
    cusp_candidates,
    cusp_divisibility_certificate,
    family_to_manifest,
    forms_through_points,
    singular_set_certificate,
)

family = concurrent_lines_example()
print("manifest form of the family:")
print(family_to_manifest(family))

config = classify_configuration(*family.forms())
print("configuration type:", config.kind.value)
print("cone vertex:", config.vertex)
print("vertex value on the quartic (must be nonzero):",
      family.quartic.evaluate(config.vertex.coords))

search = cusp_candidates(family, config)
print("\ncarrier lines (each meets the contact quadric in two cusps):")
for line in search.lines:
    on_line = [p for p in search.points
               if all(eq.evaluate(p.coords) == 0 for eq in line.equations)]
    print(f"  {line}  cusps: {', '.join(str(p) for p in on_line)}")

print("\nall six verdicts:",
      {str(p): classify(family.quartic, p).kind.value for p in search.points})

print("\nthree-divisibility certificate:",
      cusp_divisibility_certificate(family, search.points).verified)
print("no extra singularities:",
      singular_set_certificate(family, search).verified)

# The quadrics through the six cusps form a 4-dimensional space spanned by
# the contact quadric and the three quadrics through the carrier lines.
basis = forms_through_points(search.points, 2)
print("\ndimension of quadrics through the six cusps:", len(basis))
for f in basis:
    print("  basis quadric:", f)
