"""Class membership H1..H5 for the catalog and the small corpus.

The corpus run tallies how many isomorphism classes fall into each class
and confirms the chain H1 <= H2 <= H3 <= H4 <= H5 on every member.
"""

from collections import Counter

from hypercrit.criticality import classify, nesting_holds
from hypercrit.search import catalog, corpus

for name in ("triangle", "paper_example_4v", "fano"):
    m = classify(catalog(name).hypergraph)
    flags = " ".join(f"H{i}={'y' if m[i] else 'n'}" for i in range(1, 6))
    print(f"{name:18s} {flags}  {m.witnesses or ''}")

members = corpus(n_max=5, max_edges=6, max_rank=4)
tally = Counter()
for h in members:
    m = classify(h)
    assert nesting_holds(m)
    tally.update(i for i in range(1, 6) if m[i])
print(f"\ncorpus of {len(members)} hypergraphs:", {f"H{i}": tally[i] for i in range(1, 6)})
