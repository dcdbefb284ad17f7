"""Cycle spectra, the two-chord cycle C(e, e'), shortcutting and interaction families.

Two exact spectrum engines live here:

* :func:`general_spectrum` searches each length separately by backtracking over
  bitmask-encoded paths, which is what the census uses for arbitrary graphs.
* :func:`ham_spectrum` works on ``H + chords`` for large ``n``.  The Hamilton
  cycle is compressed to weighted arcs between chord endpoints, series and
  parallel bundles are folded into length *sets* (Python ints used as bitsets),
  and the simple cycles of what is left are enumerated.
"""

from __future__ import annotations

import warnings
from typing import Iterable

from .config import DEFAULT_LIMITS, LimitExceeded, Limits
from .graphs import (Chord, Cycle, CycleSet, GeneralGraph, GraphError,
                     LabelledHamGraph, as_chord, to_general)

SHARED = "shared-endpoint"
DISJOINT = "disjoint"
NESTED = "nested"
CROSSING = "crossing"


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def sumset(x: int, y: int) -> int:
    """Bitset of ``{i + j : i in x, j in y}``."""
    if bin(x).count("1") > bin(y).count("1"):
        x, y = y, x
    out = 0
    for i in _bits(x):
        out |= y << i
    return out


def _full_mask(n: int) -> int:
    return ((1 << (n + 1)) - 1) & ~0b111


# -- general graphs ---------------------------------------------------------

def _find_cycle(adj: tuple[int, ...], n: int, length: int, seen: list[int] | None = None):
    """Return a cycle of exactly ``length`` vertices as a list, or ``None``.

    Every closing edge met on the way is reported through ``seen[0]`` as a
    length bit, so callers can skip lengths that were found incidentally.
    """
    for s in range(1, n - length + 2):
        allowed = ((1 << (n + 1)) - 1) & ~((1 << (s + 1)) - 1)
        # fewer than length-1 usable vertices above s: no cycle with minimum s
        if bin(allowed).count("1") < length - 1:
            break
        path = [s]

        def dfs(v: int, visited: int, depth: int) -> bool:
            closes = adj[v] >> s & 1
            if closes and depth >= 3 and seen is not None:
                seen[0] |= 1 << depth
            if depth == length:
                return bool(closes)
            free = adj[v] & allowed & ~visited
            if bin(allowed & ~visited).count("1") < length - depth:
                return False
            while free:
                low = free & -free
                w = low.bit_length() - 1
                path.append(w)
                if dfs(w, visited | low, depth + 1):
                    return True
                path.pop()
                free ^= low
            return False

        if dfs(s, 1 << s, 1):
            return list(path)
    return None


def _check_general(g: GeneralGraph, limits: Limits) -> None:
    if g.n > limits.max_n_general:
        raise LimitExceeded(
            f"exact spectrum refused: n={g.n} exceeds max_n_general={limits.max_n_general}")


def general_spectrum(g: GeneralGraph, limits: Limits = DEFAULT_LIMITS) -> CycleSet:
    """Exact cycle set by a per-length backtracking search with early exit."""
    _check_general(g, limits)
    seen = [0]
    for length in range(g.n, 2, -1):
        if seen[0] >> length & 1:
            continue
        if _find_cycle(g.adj, g.n, length, seen) is not None:
            seen[0] |= 1 << length
    return CycleSet(g.n, seen[0] & _full_mask(g.n))


def find_cycle(g: GeneralGraph, length: int, limits: Limits = DEFAULT_LIMITS) -> Cycle | None:
    _check_general(g, limits)
    if not 3 <= length <= g.n:
        return None
    found = _find_cycle(g.adj, g.n, length)
    return Cycle(tuple(found)) if found else None


def longest_cycle(g: GeneralGraph, limits: Limits = DEFAULT_LIMITS) -> Cycle | None:
    """A longest cycle of ``g``, or ``None`` when ``g`` is acyclic."""
    _check_general(g, limits)
    for length in range(g.n, 2, -1):
        found = _find_cycle(g.adj, g.n, length)
        if found:
            return Cycle(tuple(found))
    return None


def circumference(g: GeneralGraph, limits: Limits = DEFAULT_LIMITS) -> int:
    """Length of a longest cycle; 0 for acyclic graphs."""
    c = longest_cycle(g, limits)
    return len(c) if c else 0


# -- H + chords -------------------------------------------------------------

class _Reducer:
    """Multigraph with length-set weights; parallel edges are folded on insertion."""

    def __init__(self, n: int):
        self.n = n
        self.nbr: dict[int, dict[int, int]] = {}
        self.found = 0

    def add(self, u: int, v: int, w: int) -> None:
        nu = self.nbr.setdefault(u, {})
        nv = self.nbr.setdefault(v, {})
        if v in nu:
            # the two bundles close a cycle through u and v
            self.found |= sumset(nu[v], w)
            nu[v] |= w
        else:
            nu[v] = w
        nv[u] = nu[v]

    def remove(self, w: int) -> None:
        for u in self.nbr.pop(w):
            del self.nbr[u][w]

    def reduce(self) -> None:
        queue = list(self.nbr)
        while queue:
            w = queue.pop()
            if w not in self.nbr:
                continue
            nb = self.nbr[w]
            if len(nb) <= 1:
                rest = list(nb)
                self.remove(w)
                queue.extend(rest)
            elif len(nb) == 2:
                (u, wu), (v, wv) = nb.items()
                self.remove(w)
                self.add(u, v, sumset(wu, wv))
                queue.extend((u, v))

    def enumerate_cycles(self, stop: int) -> None:
        nodes = sorted(self.nbr)
        for s in nodes:
            if self.found & stop == stop:
                return
            self._from(s)

    def _from(self, s: int) -> None:
        nbr = self.nbr
        first_of: list[int] = [0]

        def dfs(v: int, onpath: set, weight: int, depth: int) -> None:
            for w, ew in nbr[v].items():
                if w < s:
                    continue
                if w == s:
                    # count each cycle in one orientation only
                    if depth >= 3 and first_of[0] < v:
                        self.found |= sumset(weight, ew)
                    continue
                if w in onpath:
                    continue
                if depth == 1:
                    first_of[0] = w
                onpath.add(w)
                dfs(w, onpath, sumset(weight, ew), depth + 1)
                onpath.discard(w)

        dfs(s, {s}, 1, 1)


def ham_spectrum(g: LabelledHamGraph, limits: Limits = DEFAULT_LIMITS) -> CycleSet:
    """Exact cycle set of ``H + chords`` via arc compression and series/parallel folding."""
    if len(g.chords) > limits.max_chords:
        raise LimitExceeded(
            f"exact spectrum refused: {len(g.chords)} chords exceeds max_chords={limits.max_chords}")
    n = g.n
    if not g.chords:
        return CycleSet(n, 1 << n)
    pts = sorted({p for c in g.chords for p in (c.a, c.b)})
    red = _Reducer(n)
    for p, q in zip(pts, pts[1:]):
        red.add(p, q, 1 << (q - p))
    red.add(pts[-1], pts[0], 1 << (n - pts[-1] + pts[0]))
    for c in g.chords:
        red.add(c.a, c.b, 1 << 1)
    red.reduce()
    full = _full_mask(n)
    red.enumerate_cycles(full)
    return CycleSet(n, red.found & full)


def spectrum(g, limits: Limits = DEFAULT_LIMITS) -> CycleSet:
    """Exact cycle set of a :class:`GeneralGraph` or :class:`LabelledHamGraph`.

    Raises :class:`LimitExceeded` rather than approximating when the graph is
    beyond the configured limits.
    """
    if isinstance(g, LabelledHamGraph):
        if len(g.chords) <= limits.max_chords:
            return ham_spectrum(g, limits)
        if g.n <= limits.max_n_general:
            return general_spectrum(to_general(g), limits)
        raise LimitExceeded(
            f"exact spectrum refused: {len(g.chords)} chords > max_chords={limits.max_chords}"
            f" and n={g.n} > max_n_general={limits.max_n_general}")
    return general_spectrum(g, limits)


# -- two-chord cycles -------------------------------------------------------

def pair_kind(e: Chord, f: Chord) -> str:
    if {e.a, e.b} & {f.a, f.b}:
        return SHARED
    if e.b < f.a or f.b < e.a:
        return DISJOINT
    if (e.a < f.a) == (f.b < e.b):
        return NESTED
    return CROSSING


def _check_pair(n: int, e, f) -> tuple[Chord, Chord]:
    e, f = as_chord(e), as_chord(f)
    e.check(n)
    f.check(n)
    if e == f:
        raise GraphError(f"C(e, e') needs distinct chords, got {e} twice")
    return e, f


def pair_cycle(n: int, e, f) -> Cycle:
    """The cycle C(e, e') through both chords whose remaining edges lie on H.

    For crossing chords the cycle runs ``a_e -> b_e``, up along H to ``b_e'``,
    across to ``a_e'`` and down along H back to ``a_e``, where ``e`` is the chord
    with the smaller left endpoint.
    """
    e, f = _check_pair(n, e, f)
    if f.a < e.a or (f.a == e.a and f.b < e.b):
        e, f = f, e
    kind = pair_kind(e, f)
    if kind == SHARED:
        if e.a == f.a:
            vs = [e.a, *range(e.b, f.b + 1)]
        elif e.b == f.b:
            vs = [e.b, *range(f.a, e.a - 1, -1)]
        else:
            # e.b == f.a: the route back to a_e has to avoid b_e
            vs = [e.a, e.b, *range(f.b, n + 1), *range(1, e.a)]
    elif kind == DISJOINT:
        vs = [e.a, *range(e.b, f.a + 1), *range(f.b, n + 1), *range(1, e.a)]
    elif kind == NESTED:
        vs = [e.a, *range(e.b, f.b - 1, -1), *range(f.a, e.a, -1)]
    else:
        vs = [e.a, *range(e.b, f.b + 1), *range(f.a, e.a, -1)]
    return Cycle(tuple(vs))


def crossing_complement(n: int, e, f) -> Cycle:
    """For crossing chords, the other cycle through both: ``a_e -> b_e``, down to ``a_e'``,
    across to ``b_e'`` and around the outside of H back to ``a_e``."""
    e, f = _check_pair(n, e, f)
    if f.a < e.a:
        e, f = f, e
    if pair_kind(e, f) != CROSSING:
        raise GraphError(f"{e} and {f} do not cross")
    vs = [e.a, *range(e.b, f.a - 1, -1), *range(f.b, n + 1), *range(1, e.a)]
    return Cycle(tuple(vs))


def pair_cycle_length(n: int, e, f) -> int:
    """``len(pair_cycle(n, e, f))`` in closed form."""
    e, f = _check_pair(n, e, f)
    if f.a < e.a or (f.a == e.a and f.b < e.b):
        e, f = f, e
    kind = pair_kind(e, f)
    if kind == SHARED:
        if e.a == f.a:
            return f.b - e.b + 2
        if e.b == f.b:
            return f.a - e.a + 2
        return n - f.b + e.a + 2
    if kind == DISJOINT:
        return n - e.gap - f.gap
    if kind == NESTED:
        return (e.b - f.b + 1) + (f.a - e.a + 1)
    return (f.a - e.a + 1) + (f.b - e.b + 1)


def shortcut(c: Cycle, e) -> Cycle:
    """Drop labels ``a+1 .. b-1`` from ``c``; they must run consecutively ``a, ..., b`` along ``c``."""
    e = e if isinstance(e, Chord) else Chord(*e)
    vs = c.vertices
    k = len(vs)
    want = list(range(e.a, e.b + 1))
    missing = [v for v in want if v not in vs]
    if missing:
        raise GraphError(f"cannot shortcut along {e}: labels {missing} are not on the cycle")
    i = vs.index(e.a)
    for step in (1, -1):
        run = [vs[(i + step * j) % k] for j in range(len(want))]
        if run == want:
            drop = set(want[1:-1])
            return Cycle(tuple(v for v in vs if v not in drop))
    raise GraphError(f"cannot shortcut along {e}: labels {e.a}..{e.b} are not consecutive on the cycle")


def interaction_spectrum(n: int, e, R: Iterable) -> CycleSet:
    """Lengths of C(e, e') over ``e' in R \\ {e}``."""
    e = as_chord(e)
    mask = 0
    for f in R:
        f = as_chord(f)
        if f != e:
            mask |= 1 << pair_cycle_length(n, e, f)
    return CycleSet(n, mask)


def pairwise_spectrum(n: int, R: Iterable) -> CycleSet:
    """Lengths of C(e, e') over unordered pairs of ``R``; warns and returns the empty set if ``|R| < 2``."""
    chords = sorted({as_chord(c) for c in R})
    if len(chords) < 2:
        warnings.warn("pairwise spectrum of fewer than two chords is empty", stacklevel=2)
        return CycleSet(n, 0)
    mask = 0
    for i, e in enumerate(chords):
        for f in chords[i + 1:]:
            mask |= 1 << pair_cycle_length(n, e, f)
    return CycleSet(n, mask)
