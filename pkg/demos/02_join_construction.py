"""An outer automorphism group that is not a virtual duality group.

Take two graphs whose RAAGs are noncyclic with finite outer automorphism
groups.  For their disjoint union, the outer automorphism group of the
RAAG is virtually the RAAG on the *join* of the two graphs.  If the join's
flag complex fails to be Cohen-Macaulay, no finite-index torsion-free
subgroup can be a duality group.

The packaged fixture pair realizes this: a pentagon, and a 12-vertex
graph (hexagon, two filled fans, a middle edge, two bridging strings)
whose flag complex mixes maximal edges with maximal triangles.
"""

from raagscan import (
    disjoint_union,
    flag_complex,
    join,
    join_certificate,
    out_is_finite,
    out_virtual_duality_verdict,
)
from raagscan.fixtures import load_fixture

gamma1 = load_fixture("two_part_gamma1.edges")
gamma2 = load_fixture("two_part_gamma2.edges")

for name, g in (("factor 1 (pentagon)", gamma1), ("factor 2", gamma2)):
    report = out_is_finite(g)
    print(f"{name}: {g.n} vertices, {g.edge_count()} edges, "
          f"Out finite: {report.finite}")

certificate = join_certificate(gamma1, gamma2)
print("\njoin construction applicable:", certificate.applicable)
print("factors one-ended:", certificate.factors_one_ended,
      "| trivial centers:", certificate.factors_center_trivial)

delta = join(gamma1, gamma2)
complex_ = flag_complex(delta)
sizes = sorted({len(f) - 1 for f in complex_.facets})
print(f"\njoin: {delta.n} vertices; flag complex dimension "
      f"{complex_.dimension()} with maximal simplex dimensions {sizes}")
print("pure:", complex_.is_pure())

gamma = disjoint_union(gamma1, gamma2)
evidence = out_virtual_duality_verdict(gamma)
print(f"\nverdict for the disjoint union: {evidence.verdict}")
print("reason:", evidence.reason)
