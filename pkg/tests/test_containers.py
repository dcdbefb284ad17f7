from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cyclespec.config import LimitExceeded
from cyclespec.containers import (ContainerFamily, Encoding, InfeasibleError, all_chords,
                                  case2_sums, chain_antichain, classify, cover_check,
                                  dyadic_class, encoding_spectrum, family_prime,
                                  fourth_root_ceil, independence_threshold, is_independent,
                                  max_independent, phi_encode, pierce_set, precedes, psi_encode,
                                  psi_soundness_check, shifted_spectra, weight_sum,
                                  window_exclude)
from cyclespec.cycles import shortcut, spectrum
from cyclespec.graphs import Chord, CycleSet, GraphError, LabelledHamGraph, make_ham_graph
from cyclespec.instances import (CASE2_FIXTURES, case2_fixture, h1_instance,
                                 independent_chords, pierced_family)

from oracles import (brute_largest_antichain, brute_longest_chain, brute_max_independent,
                     cycle_lengths, ham_edges, subset_sums)


def chords(*pairs):
    return [Chord(*p) for p in pairs]


class TestMaxIndependent:
    def test_examples(self):
        assert max_independent(chords((1, 3), (2, 5), (4, 6), (7, 9))) == tuple(
            chords((1, 3), (4, 6), (7, 9)))
        assert max_independent(chords((1, 4), (1, 3), (5, 7))) == tuple(chords((1, 3), (5, 7)))
        assert max_independent(chords((1, 5))) == (Chord(1, 5),)
        assert max_independent([]) == ()

    def test_touching_chords_are_not_independent(self):
        assert len(max_independent(chords((1, 4), (4, 7)))) == 1

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.tuples(st.integers(1, 20), st.integers(2, 8)), min_size=1, max_size=12))
    def test_matches_brute_force(self, raw):
        R = sorted({(a, a + s) for a, s in raw})
        got = max_independent([Chord(a, b) for a, b in R])
        assert is_independent(got)
        assert (len(got), sum(e.span for e in got)) == brute_max_independent(R)


class TestDyadicClass:
    def test_tally(self):
        R = chords((1, 4), (5, 9), (10, 14), (20, 30), (31, 49))
        L, R_L = dyadic_class(R, 64)
        assert L == 4 and R_L == (Chord(5, 9), Chord(10, 14))

    def test_single_bucket(self):
        R = chords((1, 6), (3, 8), (10, 15))
        assert dyadic_class(R, 20) == (4, tuple(R))

    def test_single_chord(self):
        assert dyadic_class(chords((2, 11)), 20) == (8, (Chord(2, 11),))

    def test_ties_pick_smallest(self):
        assert dyadic_class(chords((1, 3), (5, 9)), 16)[0] == 2


class TestClassify:
    def test_threshold_values(self):
        assert independence_threshold(64, 16) == 1
        assert independence_threshold(64, 256) == 3
        assert independence_threshold(64, 256, K=2) == 2

    def test_degenerate_threshold(self):
        g = LabelledHamGraph(64, tuple(all_chords(64)[:16]))
        assert classify(g, 16).kind == "H1"

    def test_pierced_graph_is_h2(self):
        R = [Chord(a, b) for a in range(1, 32) for b in range(33, 64)][:256]
        cls = classify(LabelledHamGraph(64, tuple(R)), 256)
        assert cls.kind == "H2" and len(cls.independent) == 1

    def test_three_disjoint_is_h1(self):
        R = [Chord(a, b) for a in range(10, 32) for b in range(33, 61)][:254]
        g = LabelledHamGraph(64, tuple(R) + (Chord(1, 3), Chord(62, 64)))
        cls = classify(g, 256)
        assert cls.kind == "H1" and len(cls.independent) == 3

    def test_edge_precondition(self):
        with pytest.raises(ValueError, match="fewer than"):
            classify(LabelledHamGraph(64, (Chord(1, 3),)), 16)


class TestPsiEncode:
    def test_case1(self):
        I = chords((1, 4), (6, 9), (11, 14))
        g = LabelledHamGraph(16, tuple(I))
        a = psi_encode(g, I, 16)
        assert a.case == 1 and a.pairs == ((3, 2), (0, 0)) and a.t == 2
        assert psi_soundness_check(g, I, a)

    def test_case2(self):
        I = chords((1, 4), (5, 10), (11, 20))
        g = LabelledHamGraph(24, tuple(I))
        a = psi_encode(g, I, 16)
        assert a.case == 2 and a.pairs == ((1, 8), (1, 4))
        assert psi_soundness_check(g, I, a)

    def test_single_chord_padded(self):
        I = chords((3, 8))
        a = psi_encode(LabelledHamGraph(12, tuple(I)), I, 16)
        assert a.pairs == ((1, 4), (0, 0))

    def test_rejects_non_independent(self):
        I = chords((1, 4), (3, 8))
        with pytest.raises(ValueError, match="not independent"):
            psi_encode(LabelledHamGraph(12, tuple(I)), I, 16)

    def test_rejects_foreign_chords(self):
        with pytest.raises(ValueError, match="not chords"):
            psi_encode(LabelledHamGraph(12, (Chord(1, 4),)), chords((6, 9)), 16)

    def test_fourth_root(self):
        assert [fourth_root_ceil(p) for p in (1, 2, 16, 17, 81, 82)] == [1, 2, 2, 3, 3, 4]

    def test_adversarial_encoding_fails(self):
        g = LabelledHamGraph(10)
        assert not psi_soundness_check(g, (), Encoding(((1, 1),)))


class TestEncodingSpectrum:
    def test_example(self):
        assert encoding_spectrum(Encoding(((2, 2), (1, 3))), 10).sorted() == [3, 5, 6, 7, 8, 10]

    def test_empty(self):
        assert encoding_spectrum(Encoding(()), 9).sorted() == [9]

    def test_single(self):
        assert encoding_spectrum(Encoding(((1, 4),)), 12).sorted() == [8, 12]

    def test_too_large(self):
        with pytest.raises(ValueError):
            encoding_spectrum(Encoding(((3, 3),)), 10)

    @given(st.lists(st.tuples(st.integers(1, 3), st.integers(1, 6)), max_size=4))
    def test_matches_subset_sums(self, pairs):
        a = Encoding(tuple(pairs))
        n = sum(a.multiset()) + 3
        want = {n - s for s in subset_sums(a.multiset())}
        assert set(encoding_spectrum(a, n)) == want


def test_shortcut_subsets_sound_on_small_cases():
    rng = random.Random(9)
    for _ in range(40):
        gaps = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
        I = independent_chords(rng, gaps)
        n = max(e.b for e in I) + rng.randint(0, 3)
        if I[0].a == 1 and I[-1].b == n:
            n += 1
        got = set(spectrum(LabelledHamGraph(n, tuple(I))))
        want = cycle_lengths(n, ham_edges(n, [tuple(e) for e in I]))
        assert got == want
        assert {n - s for s in subset_sums([e.gap for e in I])} <= got


@pytest.mark.parametrize("case", [1, 2])
def test_psi_on_seeded_instances(case):
    rng = random.Random(100 + case)
    for _ in range(15):
        g, p, I = h1_instance(rng, case)
        assert classify(g, p).kind == "H1"
        a = psi_encode(g, I, p)
        assert a.case == case
        assert psi_soundness_check(g, I, a)
        if case == 1:
            # prefix sums of the multiset are already |I| + 1 distinct lengths
            assert len(encoding_spectrum(a, g.n)) >= len(I) + 1


class TestCase2Sums:
    def test_small(self):
        assert case2_sums([8, 4, 1]) == [12, 9, 13]

    def test_distinct_for_super_increasing(self):
        d = [64, 32, 16, 8, 4, 2]
        s = case2_sums(d)
        assert len(s) == len(set(s)) == len(d) * (len(d) - 1) // 2

    def test_distinct_brute_force(self):
        # Distinct gaps give pairwise distinct sums, up to m = 12.
        rng = random.Random(4)
        for m in range(2, 13):
            d = sorted(rng.sample(range(1, 60), m), reverse=True)
            s = case2_sums(d)
            brute = [sum(d[:q]) + d[i] for q in range(1, m) for i in range(q, m)]
            assert sorted(s) == sorted(brute)
            assert len(set(s)) == len(s)


class TestPierceSet:
    def test_example(self):
        R = chords((1, 3), (2, 6), (2, 7), (5, 9))
        pc = pierce_set(R, chords((1, 3), (5, 9)))
        assert set(pc.parts[1]) >= set(chords((2, 6), (2, 7), (5, 9)))
        assert all(e.contains(pc.x) for e in pc.X)
        assert 2 * len(pc.X) >= len(pc.parts[pc.index])

    def test_all_disjoint(self):
        R = chords((1, 3), (5, 8), (10, 12))
        pc = pierce_set(R, R)
        assert all(len(p) == 1 for p in pc.parts)
        assert len(pc.X) == 1

    def test_chord_covering_both_endpoints(self):
        R = chords((2, 4), (1, 6), (8, 10))
        pc = pierce_set(R, chords((2, 4), (8, 10)))
        assert pc.index == 0 and Chord(1, 6) in pc.X

    def test_unpierced_chord(self):
        with pytest.raises(GraphError, match="avoid every endpoint"):
            pierce_set(chords((1, 3), (5, 7)), chords((1, 3)))


class TestChainAntichain:
    def test_nested(self):
        Z, A = chain_antichain(chords((2, 10), (3, 9), (4, 8)), 5)
        assert len(Z) == 3 and len(A) == 1

    def test_crossing(self):
        Z, A = chain_antichain(chords((2, 6), (3, 7), (4, 8)), 5)
        assert len(Z) == 1 and len(A) == 3

    def test_grid(self):
        # Three mutually crossing groups, nested inside one another.
        X = [Chord(a + i, b + i) for a, b in ((1, 30), (5, 25), (9, 20)) for i in range(3)]
        Z, A = chain_antichain(X, 15)
        raw = [tuple(e) for e in X]
        assert len(Z) == 3 == brute_longest_chain(raw)
        assert len(A) >= 3 == brute_largest_antichain(raw)

    def test_unpierced_rejected(self):
        with pytest.raises(ValueError, match="do not contain"):
            chain_antichain(chords((1, 3), (4, 8)), 5)

    def test_seeded_against_brute_force(self):
        rng = random.Random(77)
        for _ in range(30):
            x = rng.randint(10, 30)
            X = pierced_family(rng, 40, rng.randint(1, 10), x)
            Z, A = chain_antichain(X, x)
            raw = [tuple(e) for e in X]
            assert len(Z) == brute_longest_chain(raw)
            assert len(A) <= brute_largest_antichain(raw)
            assert all(not precedes(e, f) and not precedes(f, e) for e, f in combinations(A, 2))
            assert len(Z) * len(A) >= len(X)


class TestShiftedSpectra:
    @pytest.mark.parametrize("name", sorted(CASE2_FIXTURES))
    def test_fixture(self, name):
        spec = CASE2_FIXTURES[name]
        f, A, I, L = case2_fixture(**spec)
        w = shifted_spectra(spec["n"], f, A, I, L)
        assert w.k == 3
        assert all(len(s) == len(A) - 1 for s in w.spectra)
        assert w.gap_condition and w.disjoint
        assert w.total_spectrum_size >= w.bound == 4 * (len(A) - 1)

    def test_levels_are_cycles_of_the_graph(self):
        f, A, I, L = case2_fixture(**CASE2_FIXTURES["n200"])
        w = shifted_spectra(200, f, A, I, L)
        edges = LabelledHamGraph(200, tuple(A) + tuple(I)).edges()
        for level in w.levels:
            for c in level:
                assert c.is_in(edges)

    def test_two_chord_antichain(self):
        f, A, I, L = case2_fixture(200, 8, 2, 15)
        w = shifted_spectra(200, f, A, I, L)
        assert all(len(s) == 1 for s in w.spectra)

    def test_four_usable_chords(self):
        f, A, I, L = case2_fixture(200, 8, 3, 4)
        with pytest.raises(InfeasibleError):
            shifted_spectra(200, f, A, I, L)

    def test_seeded_fixtures(self):
        for seed in range(3):
            rng = random.Random(seed)
            f, A, I, L = case2_fixture(400, 8, 5, 15, rng)
            w = shifted_spectra(400, f, A, I, L)
            assert w.disjoint
            assert w.total_spectrum_size >= w.bound

    def test_rejects_non_crossing(self):
        with pytest.raises(ValueError, match="do not cross"):
            shifted_spectra(100, Chord(40, 50), chords((40, 50), (42, 48)), chords((1, 9)), 8)

    def test_window_exclude(self):
        I = [Chord(3 * i + 1, 3 * i + 3) for i in range(10)]
        kept = window_exclude(I, 5)
        assert [I.index(e) for e in kept] == [0, 1, 2, 8, 9]

    def test_shortcut_of_complement(self):
        # The long crossing cycle keeps the outer labels, so outer chords shortcut it.
        from cyclespec.cycles import crossing_complement
        c = crossing_complement(40, (20, 28), (22, 30))
        assert len(shortcut(c, (2, 6))) == len(c) - 3


class TestPhiEncode:
    def test_case1_fingerprint(self):
        # Forty chords through vertex 32: a long nested chain plus a crossing run.
        R = [Chord(32 - i, 33 + i) for i in range(1, 31)] + [Chord(20 + j, 45 + j) for j in range(1, 11)]
        g = LabelledHamGraph(64, tuple(R))
        res = phi_encode(g, 40)
        assert res.case == 1 and res.fingerprint.passed
        assert set(res.F) <= set(R)
        assert res.fingerprint.achieved_spectrum_size == len(spectrum(LabelledHamGraph(64, res.F)))

    def test_rejects_h1(self):
        g = LabelledHamGraph(30, tuple(chords((1, 3), (5, 7), (9, 11), (13, 15))))
        with pytest.raises(ValueError, match="psi_encode"):
            phi_encode(g, 4)


class TestFamilyPrime:
    def test_n8_p6(self):
        fam = family_prime(8, 6)
        assert fam.floor == 1
        assert all(len(F) == 2 for prov in fam.provenance for F in prov)
        assert sum(len(prov) for prov in fam.provenance) == len(list(combinations(all_chords(8), 2)))
        assert len(fam.members) == 11
        assert weight_sum(fam) == Fraction(43, 64)
        assert all(8 in m for m in fam.members)

    def test_refusal(self):
        with pytest.raises(LimitExceeded, match="C\\(20, 5\\)"):
            family_prime(8, 26)

    def test_single_chord(self):
        fam = family_prime(6, 3)
        assert fam.floor == 1
        assert all(len(F) == 1 for prov in fam.provenance for F in prov)

    def test_roundtrip(self):
        fam = family_prime(7, 5)
        assert ContainerFamily.from_dict(fam.to_dict()) == fam


class TestWeightSum:
    def test_one_member(self):
        fam = ContainerFamily(6, (CycleSet.of(6, [3, 4, 6]),), ((),))
        assert weight_sum(fam) == Fraction(1, 8)

    def test_two_members(self):
        fam = ContainerFamily(6, (CycleSet.of(6, [6]), CycleSet.of(6, [4, 6])), ((), ()))
        assert weight_sum(fam) == Fraction(3, 4)


class TestCoverCheck:
    def test_empty_family(self):
        fam = ContainerFamily(6, (), ())
        ok, failures = cover_check(fam, [LabelledHamGraph(6)])
        assert not ok and failures[0]["index"] == 0

    def test_plain_cycle(self):
        fam = ContainerFamily(6, (CycleSet.of(6, [6]),), ((),))
        assert cover_check(fam, [LabelledHamGraph(6)]) == (True, [])

    def test_hypothesis_enforced(self):
        fam = family_prime(8, 4)
        ok, failures = cover_check(fam, [make_ham_graph(8, [(1, 3)])])
        assert not ok and "maximum degree" in failures[0]["reason"]

    def test_degree_four_graphs_covered(self):
        fam = family_prime(8, 4)
        pool = all_chords(8)
        graphs = [LabelledHamGraph(8, F) for F in combinations(pool, 3)]
        graphs = [g for g in graphs if g.max_degree() >= 4]
        assert cover_check(fam, graphs) == (True, [])
