"""The constructive transforms on small inputs, with their traces."""

from hypercrit.criticality import classify
from hypercrit.hypergraph import Hypergraph
from hypercrit.search import complete_uniform, fano, paper_example_4v, triangle
from hypercrit.transforms import minimalize, rank_lift, saturate, shrink_to_edge_critical, uniformize_extend


def show(label, h, out, trace):
    print(f"{label}: {h} -> {out}")
    for step in trace.steps:
        print("   ", step)
    print("    classes after:", classify(out).flags)


F = fano()
show("saturate(Fano minus a line)", Hypergraph(7, F.edges[1:]), *saturate(Hypergraph(7, F.edges[1:])))

bloated = Hypergraph(7, F.edges + ((0, 1, 2, 3),))
show("shrink_to_edge_critical", bloated, *shrink_to_edge_critical(bloated))

show("minimalize(Fano)", F, *minimalize(F))

show("uniformize_extend(4-vertex example)", paper_example_4v(), *uniformize_extend(paper_example_4v(), 3))

for h in (triangle(), complete_uniform(3)):
    out, report = rank_lift(h)
    print(f"rank_lift: {h} -> {out}")
    print("   ", report.to_json())
