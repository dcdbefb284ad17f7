"""Fingerprints: a few chords of a star whose spectrum is already large.

For a star of ``m`` chords at vertex 1, the greedy picks about ``sqrt(m)`` of
them, and the cycle set of the Hamilton cycle plus those chords should have at
least ``ceil(m / 24)`` members.  At this scale the guarantee is easy to beat,
so the script also prints how far above it the greedy lands.
"""

from __future__ import annotations

from cyclespec import RunConfig, collision_property, fingerprint
from cyclespec.instances import star_instance

rng = RunConfig(seed=1).rng()
print(f"{'n':>4} {'|R|':>4} {'|F|':>4} {'|S(H+F)|':>9} {'guarantee':>9}")
for _ in range(8):
    g = star_instance(rng, max_n=400, sizes=(4, 100))
    assert collision_property(g.n, g.chords)[0]
    res = fingerprint(g.n, g.chords)
    print(f"{g.n:4d} {len(g.chords):4d} {len(res.F):4d} {res.achieved_spectrum_size:9d} {res.guarantee:9d}")

# Chords that are far apart and have equal gaps break the collision property.
ok, witness = collision_property(14, [(1, 5), (7, 9), (8, 10), (9, 11)])
print("collision property on a disjoint family:", ok, "witness", witness)
