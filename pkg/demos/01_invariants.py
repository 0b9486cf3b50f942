"""Exact invariants of a few named hypergraphs.

Prints the transversal number, matching number and per-vertex quasidegree
with their witnesses, then a 3-colouring built by the two-colours-on-one-edge
construction.
"""

from hypercrit.search import catalog
from hypercrit.solvers import matching_number, quasidegree, three_coloring_construct, transversal_number

for name in ("triangle", "paper_example_4v", "complete_uniform(3)", "fano"):
    h = catalog(name).hypergraph
    tau = transversal_number(h)
    alpha = matching_number(h)
    print(f"{name}: n={h.n}, {len(h)} edges")
    print(f"  tau = {tau.tau}, least minimum transversal {tau.witness}")
    print(f"  alpha' = {alpha.alpha_prime}")
    print("  qd =", [quasidegree(h, v).qd for v in range(h.n)])
    print("  3-colouring", three_coloring_construct(h).assignment)
