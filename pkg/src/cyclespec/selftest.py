"""Small embedded oracle suite run by ``cyclespec selftest``."""

from __future__ import annotations

from itertools import combinations

from .census import census_exhaustive, faudree, faudree_census, upper_subsets
from .containers import Encoding, all_chords, encoding_spectrum, max_independent
from .cycles import general_spectrum, ham_spectrum, pair_cycle, pair_cycle_length, spectrum
from .graphs import GeneralGraph, LabelledHamGraph, make_ham_graph, to_general


def _pair_cycles_match() -> bool:
    for n in range(4, 10):
        chords = all_chords(n)
        H = {(i, i + 1) for i in range(1, n)} | {(1, n)}
        for e, f in combinations(chords, 2):
            c = pair_cycle(n, e, f)
            edges = c.edge_set()
            if len(c) != pair_cycle_length(n, e, f):
                return False
            if not {(e.a, e.b), (f.a, f.b)} <= edges or not edges - {(e.a, e.b), (f.a, f.b)} <= H:
                return False
    return True


def _engines_agree() -> bool:
    for n in range(4, 9):
        for F in combinations(all_chords(n), 2):
            g = LabelledHamGraph(n, F)
            if ham_spectrum(g) != general_spectrum(to_general(g)):
                return False
    return True


def _independent_brute() -> bool:
    R = all_chords(7)[:9]
    best = None
    for r in range(len(R) + 1):
        for S in combinations(R, r):
            ordered = sorted(S, key=lambda e: e.a)
            if all(x.b < y.a for x, y in zip(ordered, ordered[1:])):
                key = (-len(S), sum(e.span for e in S))
                if best is None or key < best:
                    best = key
    got = max_independent(R)
    return (-len(got), sum(e.span for e in got)) == best


CHECKS = {
    "spectrum_example": lambda: spectrum(make_ham_graph(6, [(1, 3), (1, 4)])).sorted() == [3, 4, 5, 6],
    "path_is_acyclic": lambda: len(general_spectrum(
        GeneralGraph.from_edges(5, [(i, i + 1) for i in range(1, 5)]))) == 0,
    "pair_cycles_n_le_9": _pair_cycles_match,
    "engines_agree_n_le_8": _engines_agree,
    "max_independent_brute": _independent_brute,
    "encoding_spectrum_example": lambda: encoding_spectrum(
        Encoding(((2, 2), (1, 3))), 10).sorted() == [3, 5, 6, 7, 8, 10],
    "census_3_4": lambda: (census_exhaustive(3).count, census_exhaustive(4).count) == (2, 4),
    "faudree_8": lambda: faudree_census(8) == 16 and all(
        general_spectrum(faudree(8, A)).restrict(5, 8).sorted() == list(A) for A in upper_subsets(8)),
}


def run_selftest() -> dict:
    results = []
    for name, check in CHECKS.items():
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failed check
            results.append({"name": name, "passed": False, "error": repr(exc)})
            continue
        results.append({"name": name, "passed": ok})
    return {"checks": results, "passed": all(r["passed"] for r in results)}
