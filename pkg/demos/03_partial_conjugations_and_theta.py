"""Partial conjugations and the commutation graph theta.

For the free product of abelian groups of ranks 2, 3, 4 (the RAAG on
K2 | K3 | K4), the pure symmetric outer automorphism group turns out to
be the same RAAG again.  This script walks the construction: catalog the
partial conjugations, check the support-graph forest gate, and build the
commutation graph on two independent backends (a closed-form rule over
vertex sets, and a word-level engine that tests whether commutators are
inner automorphisms).
"""

from raagscan import (
    all_supports_forests,
    canonical_form,
    complete_graph,
    disjoint_union,
    partial_conjugation_catalog,
    support_graph,
    theta_graph,
)
from raagscan.pso import BACKEND_COMBINATORIAL, BACKEND_WORD_ORACLE

graph = disjoint_union(
    disjoint_union(complete_graph(2), complete_graph(3)), complete_graph(4)
)
print(f"defining graph: {graph.n} vertices, {graph.edge_count()} edges "
      "(blocks {0,1}, {2,3,4}, {5,...,8})")

catalog = partial_conjugation_catalog(graph)
print(f"\npartial conjugations: {len(catalog)} total")
for pc in catalog[:4]:
    print(f"  actor {pc.actor} conjugates {sorted(pc.component)}"
          + ("  [dropped: product over all components is inner]"
             if pc.droppable else ""))
print("  ...")
net = [pc for pc in catalog if not pc.redundant and not pc.droppable]
print(f"net outer generators: {len(net)}")

ok, _ = all_supports_forests(graph)
print("\nevery support graph a forest:", ok)
print("support graph at vertex 0:",
      support_graph(graph, 0).graph.sorted_edges())

comb = theta_graph(graph, BACKEND_COMBINATORIAL)
word = theta_graph(graph, BACKEND_WORD_ORACLE)
print("\ncommutation graph (closed-form backend):",
      comb.theta.n, "vertices,", comb.theta.edge_count(), "edges")
print("word-oracle backend gives the identical graph:",
      comb.theta == word.theta)
print("isomorphic to the defining graph:",
      canonical_form(comb.theta) == canonical_form(graph))
