"""Cycle spectra of Hamiltonian graphs and the cycles built from two chords.

Run with ``python demos/spectra_and_pair_cycles.py``.
"""

from __future__ import annotations

from itertools import combinations

from cyclespec import Chord, make_ham_graph, pair_cycle, pair_kind, spectrum
from cyclespec.cycles import shortcut

# A 6-cycle with two chords from vertex 1 already has every length 3..6.
g = make_ham_graph(6, [(1, 3), (1, 4)])
print("S(C6 + (1,3) + (1,4)) =", spectrum(g).sorted())

# Two chords on the 12-cycle give one designated cycle per pair; the kind of
# the pair decides which one.
n = 12
chords = [(2, 5), (4, 9), (7, 10), (3, 11)]
for e, f in combinations(chords, 2):
    c = pair_cycle(n, e, f)
    kind = pair_kind(Chord(*e), Chord(*f))
    print(f"{e} {f}: {kind:9s} length {len(c):2d}  {c.vertices}")

# Shortcutting removes the interior labels of a chord from a cycle that runs
# through them in order.
c = pair_cycle(n, (2, 5), (7, 10))
print("shortcut", c.vertices, "along (10,12) ->", shortcut(c, (10, 12)).vertices)

# The structured engine copes with long cycles and a moderate number of chords.
big = make_ham_graph(300, [(1, b) for b in range(40, 300, 37)] + [(150, 200), (10, 90)])
s = spectrum(big)
print(f"n=300 with {len(big.chords)} chords: {len(s)} distinct cycle lengths, min {min(s)}, max {max(s)}")
