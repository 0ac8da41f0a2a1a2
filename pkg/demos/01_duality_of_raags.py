"""When is a right-angled Artin group a duality group?

The RAAG on a graph has one generator per vertex, with generators
commuting exactly along edges.  It has homology-cohomology duality
exactly when the flag complex of the graph is Cohen-Macaulay: pure, with
reduced homology (of the complex and of every link) free and concentrated
in top degree.  This walk-through checks a few familiar graphs.
"""

from raagscan import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    flag_complex,
    is_cohen_macaulay,
    path_graph,
    raag_duality_verdict,
    reduced_homology,
)

candidates = {
    "pentagon": cycle_graph(5),
    "path on 4 vertices": path_graph(4),
    "complete graph K5 (free abelian of rank 5)": complete_graph(5),
    "two disjoint edges (free product of two rank-2 abelian groups)":
        disjoint_union(complete_graph(2), complete_graph(2)),
}

for name, graph in candidates.items():
    complex_ = flag_complex(graph)
    profile = reduced_homology(complex_)
    verdict = raag_duality_verdict(graph)
    print(f"{name}:")
    print(f"  flag complex: dimension {complex_.dimension()}, "
          f"pure={complex_.is_pure()}, facets={list(complex_.facets)}")
    print(f"  reduced homology: {profile.describe()}")
    print(f"  duality group: {verdict.is_duality_group}"
          + (f"  (obstruction: {verdict.cm.obstruction})"
             if not verdict.is_duality_group else ""))
    print()

# The pentagon's flag complex is a circle: homology Z in degree 1, links
# of vertices are pairs of points (free in degree 0), so it is
# Cohen-Macaulay.  Two disjoint edges are pure of dimension 1 but
# disconnected: reduced H_0 = Z blocks duality.
two_edges = disjoint_union(complete_graph(2), complete_graph(2))
verdict = is_cohen_macaulay(flag_complex(two_edges))
print("two disjoint edges, full Cohen-Macaulay check:",
      verdict.obstruction, "in degree", verdict.witness_degree)
