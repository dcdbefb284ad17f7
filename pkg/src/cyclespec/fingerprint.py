"""Fingerprint greedy: pick a small chord subset whose spectrum certifies many interaction lengths."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import isqrt
from typing import Iterable

from .config import DEFAULT_LIMITS, Limits
from .cycles import interaction_spectrum, pair_cycle_length, spectrum
from .graphs import Chord, CycleSet, LabelledHamGraph, as_chord


class CollisionError(ValueError):
    """The chord set has three chords sharing an interaction length with a fourth."""

    def __init__(self, witness):
        self.witness = witness
        e, f, (g1, g2) = witness
        super().__init__(
            f"collision property fails: |C({e},{f})| = |C({e},{g1})| = |C({e},{g2})|")


def ceil_sqrt(m: int) -> int:
    """Smallest ``s`` with ``s * s >= m``."""
    s = isqrt(m)
    return s if s * s == m else s + 1


def half_ceil_sqrt(m: int) -> int:
    """Smallest ``h`` with ``2h >= sqrt(m)``, i.e. ``ceil(sqrt(m) / 2)``."""
    h = isqrt(m) // 2
    while 4 * h * h < m:
        h += 1
    return h


def collision_property(n: int, R: Iterable):
    """Check that for distinct ``e, e'`` at most one other ``e''`` has ``|C(e,e'')| = |C(e,e')|``.

    Returns ``(True, None)`` or ``(False, (e, e', (e''_1, e''_2)))``.
    """
    chords = sorted({as_chord(c) for c in R})
    for e in chords:
        by_len = defaultdict(list)
        for f in chords:
            if f != e:
                by_len[pair_cycle_length(n, e, f)].append(f)
        for group in by_len.values():
            if len(group) >= 3:
                return False, (e, group[0], (group[1], group[2]))
    return True, None


@dataclass(frozen=True)
class FingerprintResult:
    F: tuple[Chord, ...]
    F1: tuple[Chord, ...]
    F2: tuple[Chord, ...]
    achieved_spectrum_size: int
    guarantee: int
    target_size: int
    Y: CycleSet

    @property
    def passed(self) -> bool:
        return self.achieved_spectrum_size >= self.guarantee

    def to_dict(self) -> dict:
        return {
            "F": [[c.a, c.b] for c in self.F],
            "F1": [[c.a, c.b] for c in self.F1],
            "F2": [[c.a, c.b] for c in self.F2],
            "target_size": self.target_size,
            "size": len(self.F),
            "achieved_spectrum_size": self.achieved_spectrum_size,
            "guarantee": self.guarantee,
            "passed": self.passed,
        }


def fingerprint(n: int, R: Iterable, limits: Limits = DEFAULT_LIMITS,
                check: bool = True) -> FingerprintResult:
    """Two-phase greedy.

    ``F1`` is the ``ceil(sqrt|R|/2)`` lexicographically smallest chords.  Then, for
    as many rounds, the unused chord ``e`` maximising ``|S(C(e, F1)) \\ Y|`` joins
    ``F2`` (smallest chord on ties) and ``Y`` absorbs ``S(C(e, F1))``; ``Y``
    starts as the spectrum of ``H + F1``.
    """
    chords = sorted({as_chord(c) for c in R})
    for c in chords:
        c.check(n)
    m = len(chords)
    if m < 4:
        raise ValueError(f"fingerprint needs |R| >= 4, got {m}")
    if check:
        ok, witness = collision_property(n, chords)
        if not ok:
            raise CollisionError(witness)

    h = half_ceil_sqrt(m)
    F1 = chords[:h]
    Y = spectrum(LabelledHamGraph(n, tuple(F1)), limits)
    F2: list[Chord] = []
    pool = chords[h:]
    for _ in range(h):
        best, best_gain, best_set = None, -1, None
        for e in pool:
            s = interaction_spectrum(n, e, F1)
            gain = len(s - Y)
            if gain > best_gain:
                best, best_gain, best_set = e, gain, s
        F2.append(best)
        pool.remove(best)
        Y = Y | best_set

    F = tuple(sorted(F1 + F2))
    achieved = len(spectrum(LabelledHamGraph(n, F), limits))
    return FingerprintResult(
        F=F, F1=tuple(F1), F2=tuple(F2), achieved_spectrum_size=achieved,
        guarantee=-(-m // 24), target_size=ceil_sqrt(m), Y=Y)
