"""How many distinct cycle sets do graphs on n vertices have?

The exhaustive labelled census is feasible up to n = 7 (2^21 graphs).  The
count is compared with the trivial bound 2^(n-2) (all subsets of {3..n}) and
the 2^(n/2) floor from the path-plus-star construction, which realises every
subset of the upper half {n/2+1, ..., n}.
"""

from __future__ import annotations

import time
from itertools import combinations
from pathlib import Path

from cyclespec import (GeneralGraph, bounds_report, census, faudree, general_spectrum,
                       theorem_partition_check)
from cyclespec.census import census_stream

print(f"{'n':>2} {'graphs':>9} {'count':>6} {'2^(n-2)':>8} {'2^(n/2)':>8} {'seconds':>8}")
for n in range(3, 8):
    t = time.perf_counter()
    rec = census(n)
    b = bounds_report(rec)
    print(f"{n:2d} {rec.graphs_scanned:9d} {rec.count:6d} {b['subset_bound']:8d}"
          f" {b['faudree_floor']:8d} {time.perf_counter() - t:8.2f}")

g6 = Path(__file__).resolve().parent.parent / "tests" / "data" / "graphs8.g6"
if g6.exists():
    rec = census_stream(g6)
    print(f" 8 {rec.graphs_scanned:9d} {rec.count:6d}   (non-isomorphic graph list)")

# The path 1..n plus edges {1, a} realises exactly A in the upper half.
n, A = 10, [6, 8, 9]
s = general_spectrum(faudree(n, A))
print(f"\npath plus star at n={n}, A={A}: spectrum {s.sorted()}, upper half {s.restrict(6, 10).sorted()}")

# Which of the four families a few graphs fall into (base-2 logarithms).
examples = {
    "C16": GeneralGraph.from_edges(16, [(i, i % 16 + 1) for i in range(1, 17)]),
    "K7": GeneralGraph.from_edges(7, list(combinations(range(1, 8), 2))),
    "star tree": GeneralGraph.from_edges(10, [(1, v) for v in range(2, 11)]),
}
for name, g in examples.items():
    r = theorem_partition_check(g)
    flags = [f for f in ("G1", "G2", "G3", "G4") if getattr(r, f)]
    print(f"{name:9s} circumference {r.circumference:2d}, edges {r.edges:2d}: {flags}")
