"""Encoding a graph by a small certificate whose cycle lengths it must contain.

Graphs with many pairwise disjoint chords are encoded by the gaps of those
chords; every way of shortcutting a subset of them is a cycle.  Graphs with few
disjoint chords are encoded by chords through a common point, either through a
fingerprint or by shifting a family of crossing cycles.
"""

from __future__ import annotations

from cyclespec import (LabelledHamGraph, classify, encoding_spectrum, family_prime,
                       phi_encode, psi_encode, shifted_spectra, spectrum, weight_sum)
from cyclespec.graphs import Chord
from cyclespec.instances import CASE2_FIXTURES, case2_fixture

# Many disjoint chords: the gap table, and the lengths it certifies.
I = [Chord(1, 4), Chord(6, 9), Chord(11, 14)]
g = LabelledHamGraph(16, tuple(I))
a = psi_encode(g, I, 16)
print("gap encoding", a.pairs, "certifies", encoding_spectrum(a, 16).sorted())
print("actual spectrum", spectrum(g).sorted())

# Few disjoint chords: everything passes through vertex 32.
R = [Chord(32 - i, 33 + i) for i in range(1, 31)] + [Chord(20 + j, 45 + j) for j in range(1, 11)]
g = LabelledHamGraph(64, tuple(R))
cls = classify(g, 40)
res = phi_encode(g, 40)
print(f"\n{len(R)} pierced chords: class {cls.kind}, threshold {cls.threshold}")
print(f"chain {len(res.Z)}, antichain {len(res.A)}, fingerprint {[tuple(e) for e in res.F]}"
      f" with {res.fingerprint.achieved_spectrum_size} cycle lengths")

# Shifting: cycles through crossing chords, shortened by blocks of disjoint chords.
for name, params in sorted(CASE2_FIXTURES.items()):
    f, A, I, L = case2_fixture(**params)
    w = shifted_spectra(params["n"], f, A, I, L)
    print(f"\nfixture {name}: |A|={len(A)}, k={w.k}, shifts {list(w.shifts)}")
    for d, s in zip(w.shifts, w.spectra):
        print(f"  shift {d:3d}: {s.sorted()}")
    print(f"  total spectrum {w.total_spectrum_size} >= bound {w.bound}")

# A materialised container family on 8 vertices.
fam = family_prime(8, 6)
print(f"\nfamily for n=8, p=6: {len(fam.members)} members, weight sum {weight_sum(fam)}")
for m, prov in zip(fam.members, fam.provenance):
    print(f"  {m.sorted()}  from {len(prov)} chord pairs")
