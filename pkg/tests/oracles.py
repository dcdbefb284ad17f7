"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's engines: graphs are plain edge lists and
cycles are found by exhaustive search over vertex sequences.
"""

from __future__ import annotations

from itertools import combinations


def ham_edges(n, chords):
    es = {(i, i + 1) for i in range(1, n)} | {(1, n)}
    es |= {(min(a, b), max(a, b)) for a, b in chords}
    return es


def adjacency(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def all_cycles(n, edges):
    """Every simple cycle as a frozenset of edges, each found once.

    A cycle is rooted at its smallest vertex ``s`` and walked from ``s`` to a
    larger neighbour; the two orientations are merged by the edge set.
    """
    adj = adjacency(n, edges)
    found = set()

    def walk(s, path, on):
        u = path[-1]
        for w in adj[u]:
            if w == s and len(path) >= 3:
                es = frozenset(tuple(sorted((path[i], path[(i + 1) % len(path)])))
                               for i in range(len(path)))
                found.add(es)
            elif w > s and w not in on:
                on.add(w)
                path.append(w)
                walk(s, path, on)
                path.pop()
                on.discard(w)

    for s in range(1, n + 1):
        walk(s, [s], {s})
    return found


def cycle_lengths(n, edges):
    return {len(c) for c in all_cycles(n, edges)}


def cycles_through(n, edges, edge):
    """Every simple cycle using ``edge = (u, v)``: simple ``v``-to-``u`` paths avoiding that edge."""
    adj = adjacency(n, edges)
    u, v = edge
    found = []

    def walk(path, on):
        x = path[-1]
        for w in adj[x]:
            if w == u and len(path) >= 2:
                cyc = [u] + path
                found.append(frozenset(tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)])))
                                       for i in range(len(cyc))))
            elif w not in on and w != u:
                on.add(w)
                path.append(w)
                walk(path, on)
                path.pop()
                on.discard(w)

    walk([v], {v})
    return set(found)


def pair_cycle_oracle(n, e, f):
    """Length of the designated cycle through chords ``e`` and ``f``.

    All cycles of ``H + {e, f}`` using both chords are enumerated.  If two
    exist (crossing chords) the one containing the Hamilton path from ``b_e``
    to ``b_f`` is kept, where ``e`` has the smaller left endpoint.
    """
    e, f = sorted([tuple(sorted(e)), tuple(sorted(f))])
    cands = [c for c in cycles_through(n, ham_edges(n, [e, f]), e) if f in c]
    if len(cands) == 1:
        return len(cands[0])
    assert len(cands) == 2, (n, e, f, cands)
    lo, hi = sorted((e[1], f[1]))
    path = {(i, i + 1) for i in range(lo, hi)}
    keep = [c for c in cands if path <= c]
    assert len(keep) == 1, (n, e, f)
    return len(keep[0])


def is_disjoint_family(chords):
    s = sorted(chords)
    return all(x[1] < y[0] for x, y in zip(s, s[1:]))


def brute_max_independent(chords):
    """``(size, total span)`` of the best strictly disjoint subfamily."""
    best = (0, 0)
    for r in range(len(chords), 0, -1):
        spans = [sum(b - a for a, b in S) for S in combinations(chords, r)
                 if is_disjoint_family(S)]
        if spans:
            return r, min(spans)
    return best


def contains(e, f):
    return e[0] <= f[0] and f[1] <= e[1]


def brute_longest_chain(chords):
    for r in range(len(chords), 0, -1):
        for S in combinations(chords, r):
            if all(contains(x, y) or contains(y, x) for x, y in combinations(S, 2)):
                return r
    return 0


def brute_largest_antichain(chords):
    for r in range(len(chords), 0, -1):
        for S in combinations(chords, r):
            if not any(contains(x, y) or contains(y, x) for x, y in combinations(S, 2)):
                return r
    return 0


def subset_sums(values):
    out = set()
    for r in range(len(values) + 1):
        for S in combinations(values, r):
            out.add(sum(S))
    return out
