"""Seeded instance generators for stress tests and structured fixtures.

Every generator takes a ``random.Random`` (normally ``RunConfig.rng()``), so a
seed fixes the instance completely.
"""

from __future__ import annotations

import random

from .graphs import Chord, LabelledHamGraph, make_ham_graph, rotate_labels


def star_instance(rng: random.Random, max_n: int = 400, sizes=(4, 100)) -> LabelledHamGraph:
    """Star of chords at a random vertex, relabelled so the centre is vertex 1."""
    m = rng.randint(*sizes)
    n = rng.randint(m + 3, max_n)
    v = rng.randint(1, n)
    others = [u for u in range(1, n + 1) if (u - v) % n not in (0, 1, n - 1)]
    ends = rng.sample(others, m)
    g = make_ham_graph(n, [(v, u) for u in ends])
    return rotate_labels(g, v)


def crossing_family(rng: random.Random, n: int, size: int, x: int | None = None,
                    L: int | None = None) -> tuple[Chord, ...]:
    """Pairwise crossing chords all containing ``x``, spans in ``[L, 2L)`` when ``L`` is given."""
    L = L or max(size, 2)
    if size > L:
        raise ValueError("need size <= L to fit distinct left endpoints")
    x = x or n // 2
    starts = sorted(rng.sample(range(x - L + 1, x + 1), size))
    spans = sorted(rng.randint(L, 2 * L - 1) for _ in range(size))
    return tuple(Chord(a, a + s) for a, s in zip(starts, spans))


def pierced_family(rng: random.Random, n: int, size: int, x: int) -> tuple[Chord, ...]:
    """Random distinct chords containing ``x`` (a mix of nested and crossing pairs)."""
    pool = [(a, b) for a in range(max(1, x - 8), x + 1) for b in range(max(x, a + 2), min(n, x + 8) + 1)
            if not (a == 1 and b == n)]
    return tuple(sorted(Chord(a, b) for a, b in rng.sample(pool, size)))


def independent_chords(rng: random.Random, gaps, lo: int = 1, slack: int = 2) -> list[Chord]:
    """Disjoint chords with the given gaps, placed left to right from ``lo``."""
    out = []
    pos = lo
    for d in gaps:
        pos += rng.randint(0, slack)
        out.append(Chord(pos, pos + d + 1))
        pos += d + 2
    return out


def h1_instance(rng: random.Random, case: int) -> tuple[LabelledHamGraph, int, tuple[Chord, ...]]:
    """A graph with many independent chords: ``(g, p, I)``.

    ``I`` is the planted independent set; ``case=1`` gives it at most
    ``ceil(p^(1/4))`` distinct gaps, ``case=2`` more.  Extra random chords bring
    the chord count up to the edge surplus ``p``.
    """
    p = rng.randint(5, 16)  # t = ceil(p^(1/4)) = 2
    t = 2
    k = rng.randint(3, 7)
    if case == 1:
        palette = rng.sample(range(1, 9), rng.randint(1, t))
        gaps = [rng.choice(palette) for _ in range(k)]
    else:
        gaps = rng.sample(range(1, 12), max(k, t + 1))
    I = independent_chords(rng, gaps)
    n = max(c.b for c in I) + rng.randint(3, 40)
    chords = set(I)
    while len(chords) < p:
        a = rng.randint(1, n - 2)
        b = rng.randint(a + 2, n)
        if not (a == 1 and b == n):
            chords.add(Chord(a, b))
    return LabelledHamGraph(n, tuple(chords)), p, tuple(I)


CASE2_FIXTURES = {
    "n400": {"n": 400, "L": 8, "anti": 6, "indep": 15},
    "n200": {"n": 200, "L": 8, "anti": 5, "indep": 15},
}


def case2_fixture(n: int, L: int, anti: int, indep: int, rng: random.Random | None = None):
    """Antichain through ``x = n/2`` plus independent chords in the same dyadic class.

    Returns ``(f, A, I, L)``.  Without ``rng`` the layout is fixed: ``A`` is
    ``(x-anti+1+i, x+L+1+i)`` and each independent chord spans exactly ``L``,
    packed left of ``A`` first and then right of it.
    """
    x = n // 2
    if rng is None:
        A = [Chord(x - anti + 1 + i, x + L + 1 + i) for i in range(anti)]
        spans = [L] * indep
    else:
        A = list(crossing_family(rng, n, anti, x, L))
        spans = [rng.randint(L, 2 * L - 1) for _ in range(indep)]
    f = min(A, key=lambda e: e.a)
    right = max(e.b for e in A)
    I = []
    pos = 1
    for s in spans:
        if pos + s >= f.a:
            break
        I.append(Chord(pos, pos + s))
        pos += s + 1
    pos = right + 1
    for s in spans[len(I):]:
        if pos + s > n or (pos == 1 and pos + s == n):
            raise ValueError("independent chords do not fit; increase n")
        I.append(Chord(pos, pos + s))
        pos += s + 1
    return f, tuple(A), tuple(I), L
