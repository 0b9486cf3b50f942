"""Largest orders of the five classes at ranks 2 and 3.

Rank 2 is searched exhaustively up to 5 vertices. Rank 3 is searched
exhaustively up to 8 vertices; this takes a minute or two.
"""

import time

from hypercrit.search import extremal_order, verify_nesting

for r, n_max in ((2, 5), (3, 8)):
    for i in range(1, 6):
        start = time.monotonic()
        rec = extremal_order(i, r, n_max)
        tag = "exhaustive" if rec.exhaustive else "partial"
        print(f"n^{i}({r}) over n <= {n_max}: {rec.best_order} ({tag}, {time.monotonic() - start:.1f}s)")
        print("    witness", rec.witness)

report = verify_nesting(3, 5)
print("\nnesting at rank 3, n <= 5:", report.checked, "checked,", len(report.violations), "violations")
for i, h in sorted(report.separators.items()):
    print(f"    in H{i + 1} but not H{i}:", h)
