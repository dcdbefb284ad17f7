"""Constructive container machinery for Hamiltonian graphs with chords.

Graphs with many *independent* chords (pairwise disjoint label intervals) are
summarised by a short gap encoding whose subset-sum spectrum is realised by
shortcutting H.  Otherwise a dyadic class of chords is pierced by a single
vertex, split into a chain and an antichain under interval containment, and
the antichain's cycles are shifted by independent chords to produce
disjoint blocks of cycle lengths.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .config import DEFAULT_LIMITS, LimitExceeded, Limits
from .cycles import (CROSSING, crossing_complement, pair_kind, shortcut,
                     spectrum)
from .fingerprint import FingerprintResult, ceil_sqrt, fingerprint
from .graphs import Chord, Cycle, CycleSet, GraphError, LabelledHamGraph, as_chord


class InfeasibleError(ValueError):
    """A construction step cannot be carried out on this (small) instance."""


def _chords(R: Iterable) -> list[Chord]:
    return sorted({as_chord(c) for c in R})


def is_independent(R: Iterable) -> bool:
    chords = sorted(_chords(R), key=lambda e: e.a)
    return all(e.b < f.a for e, f in zip(chords, chords[1:]))


def precedes(e: Chord, f: Chord) -> bool:
    """``e ≼ f``: the interval of ``e`` contains that of ``f``."""
    return e.a <= f.a and f.b <= e.b


# -- independent chords -----------------------------------------------------

def max_independent(R: Iterable) -> tuple[Chord, ...]:
    """Largest set of pairwise strictly disjoint chords, minimising total span among those.

    Weighted interval scheduling over chords sorted by right endpoint, with the
    lexicographic objective (count, -total span).
    """
    chords = sorted(_chords(R), key=lambda e: (e.b, e.a))
    ends = [e.b for e in chords]
    # best[i]: optimum over the first i chords, as (count, -span, picked)
    best: list[tuple[int, int, tuple]] = [(0, 0, ())]
    for i, e in enumerate(chords):
        j = bisect.bisect_left(ends, e.a)  # chords ending strictly before a_e
        cnt, neg, picked = best[j]
        take = (cnt + 1, neg - e.span, picked + (e,))
        skip = best[i]
        best.append(take if take[:2] > skip[:2] else skip)
    return tuple(sorted(best[-1][2]))


def dyadic_class(R: Iterable, n: int) -> tuple[int, tuple[Chord, ...]]:
    """Power of two ``L`` whose class ``L <= b - a < 2L`` is largest (smallest ``L`` on ties)."""
    chords = _chords(R)
    if not chords:
        raise ValueError("dyadic class of an empty chord set")
    buckets: dict[int, list[Chord]] = {}
    for e in chords:
        buckets.setdefault(1 << (e.span.bit_length() - 1), []).append(e)
    L = max(sorted(buckets), key=lambda k: len(buckets[k]))
    R_L = tuple(buckets[L])
    assert len(R_L) * math.ceil(math.log2(n)) >= len(chords)
    return L, R_L


def independence_threshold(n: int, p: int, K: int = 1) -> int:
    """``ceil(sqrt(p) / (K log2 n))``."""
    value = math.sqrt(p) / (K * math.log2(n))
    r = round(value)
    return r if abs(value - r) < 1e-9 else math.ceil(value)


@dataclass(frozen=True)
class Classification:
    kind: str  # "H1" or "H2"
    threshold: int
    independent: tuple[Chord, ...]  # witness, truncated to the threshold for H1


def classify(g: LabelledHamGraph, p: int, K: int = 1) -> Classification:
    if g.num_edges < g.n + p:
        raise ValueError(f"graph has {g.num_edges} edges, fewer than n + p = {g.n + p}")
    tau = independence_threshold(g.n, p, K)
    I = max_independent(g.chords)
    if len(I) >= tau:
        return Classification("H1", tau, I[:tau])
    return Classification("H2", tau, I)


# -- gap encodings ----------------------------------------------------------

def fourth_root_ceil(p: int) -> int:
    t = max(0, round(p ** 0.25) - 1)
    while t ** 4 < p:
        t += 1
    return t


@dataclass(frozen=True)
class Encoding:
    """``((n_1, d_1), ..., (n_t, d_t))``: ``n_i`` copies of gap ``d_i``; ``(0, 0)`` pads."""

    pairs: tuple[tuple[int, int], ...]
    case: int = 1
    source: tuple[Chord, ...] = field(default=(), compare=False)

    def __post_init__(self):
        for cnt, d in self.pairs:
            if cnt < 0 or d < 0:
                raise ValueError(f"negative entry in encoding {self.pairs}")
            if (cnt == 0) != (d == 0):
                raise ValueError(f"padding entries must be (0, 0), got {(cnt, d)}")

    @property
    def t(self) -> int:
        return len(self.pairs)

    def multiset(self) -> list[int]:
        return [d for cnt, d in self.pairs for _ in range(cnt)]

    def to_dict(self) -> dict:
        return {"case": self.case, "t": self.t, "pairs": [list(p) for p in self.pairs]}


def psi_encode(g: LabelledHamGraph, I: Iterable, p: int) -> Encoding:
    """Encode the gaps of the independent chords ``I`` of ``g``.

    With at most ``t = ceil(p^(1/4))`` distinct gaps the encoding is the
    run-length table (largest gap first) padded to ``t``; otherwise it lists the
    ``t`` largest distinct gaps once each, in descending order.
    """
    I = _chords(I)
    if not I:
        raise ValueError("cannot encode an empty independent set")
    if not is_independent(I):
        raise ValueError(f"chords {I} are not independent")
    missing = set(I) - set(g.chords)
    if missing:
        raise ValueError(f"chords {sorted(missing)} are not chords of the graph")
    t = fourth_root_ceil(p)
    by_gap: dict[int, list[Chord]] = {}
    for e in I:
        by_gap.setdefault(e.gap, []).append(e)
    gaps = sorted(by_gap, reverse=True)
    if len(gaps) <= t:
        pairs = [(len(by_gap[d]), d) for d in gaps] + [(0, 0)] * (t - len(gaps))
        return Encoding(tuple(pairs), 1, tuple(I))
    top = gaps[:t]
    return Encoding(tuple((1, d) for d in top), 2, tuple(by_gap[d][0] for d in top))


def encoding_spectrum(a: Encoding, n: int) -> CycleSet:
    """``{n - sum(D') : D' ⊆ D(a)}`` via boolean convolution of achievable sums."""
    D = a.multiset()
    if sum(D) >= n - 2:
        raise ValueError(f"gap total {sum(D)} leaves cycles shorter than 3 for n={n}")
    sums = 1
    for d in D:
        sums |= sums << d
    mask = 0
    s = 0
    while sums:
        if sums & 1:
            mask |= 1 << (n - s)
        sums >>= 1
        s += 1
    return CycleSet(n, mask)


def psi_soundness_check(g: LabelledHamGraph, I: Iterable, a: Encoding,
                        limits: Limits = DEFAULT_LIMITS) -> bool:
    return encoding_spectrum(a, g.n).issubset(spectrum(g, limits))


def case2_sums(gaps: Sequence[int]) -> list[int]:
    """``d_1 + ... + d_q + d_i`` for ``1 <= q < i <= m`` over the descending gaps."""
    d = sorted(gaps, reverse=True)
    out = []
    prefix = 0
    for q in range(1, len(d)):
        prefix += d[q - 1]
        out.extend(prefix + d[i] for i in range(q, len(d)))
    return out


# -- piercing, chains and antichains ----------------------------------------

@dataclass(frozen=True)
class Pierce:
    X: tuple[Chord, ...]
    x: int
    index: int  # 0-based position of e_l in I sorted by left endpoint
    parts: tuple[tuple[Chord, ...], ...]


def pierce_set(R: Iterable, I: Iterable) -> Pierce:
    """Pierce ``R`` by endpoints of ``I`` and keep the half of the largest part through one endpoint."""
    R = _chords(R)
    I = sorted(_chords(I), key=lambda e: e.a)
    if not I:
        raise ValueError("empty independent set")
    parts = tuple(
        tuple(e for e in R if e.contains(ei.a) or e.contains(ei.b)) for ei in I)
    covered = set().union(*parts)
    if covered != set(R):
        raise GraphError(
            f"chords {sorted(set(R) - covered)} avoid every endpoint of I;"
            " I is not a span-minimal maximum independent set")
    ell = max(range(len(I)), key=lambda i: (len(parts[i]), -i))
    e_l = I[ell]
    for x in (e_l.a, e_l.b):
        X = tuple(e for e in parts[ell] if e.contains(x))
        if 2 * len(X) >= len(parts[ell]):
            return Pierce(X, x, ell, parts)
    raise AssertionError("unreachable: every chord of X_l contains a_l or b_l")


def chain_antichain(X: Iterable, x: int) -> tuple[tuple[Chord, ...], tuple[Chord, ...]]:
    """Longest chain ``Z`` and a largest level ``A`` of the chain-height decomposition.

    All chords must contain ``x``; then incomparable chords cross, and
    ``|Z| * |A| >= |X|``.
    """
    X = _chords(X)
    bad = [e for e in X if not e.contains(x)]
    if bad:
        raise ValueError(f"chords {bad} do not contain x={x}")
    if not X:
        return (), ()
    order = sorted(X, key=lambda e: (e.a, -e.b))
    height = [1] * len(order)
    prev = [-1] * len(order)
    for i, e in enumerate(order):
        for j in range(i):
            if precedes(order[j], e) and height[j] + 1 > height[i]:
                height[i], prev[i] = height[j] + 1, j
    top = max(range(len(order)), key=lambda i: (height[i], -i))
    Z = []
    while top >= 0:
        Z.append(order[top])
        top = prev[top]
    Z.reverse()
    levels: dict[int, list[Chord]] = {}
    for h, e in zip(height, order):
        levels.setdefault(h, []).append(e)
    A = max(sorted(levels), key=lambda h: len(levels[h]))
    A = tuple(sorted(levels[A]))

    for e, f in zip(Z, Z[1:]):
        assert precedes(e, f)
    for e, f in combinations(A, 2):
        assert not precedes(e, f) and not precedes(f, e)
        # pierced and incomparable: the intervals cross (possibly meeting at x)
        assert e.a < f.a <= e.b < f.b
    assert len(Z) * len(A) >= len(X)
    return tuple(Z), A


# -- shifting ---------------------------------------------------------------

@dataclass(frozen=True)
class Case2Witness:
    n: int
    f: Chord
    A: tuple[Chord, ...]
    I: tuple[Chord, ...]  # usable chords, sorted by left endpoint
    x: int
    L: int
    S_chain: tuple[tuple[Chord, ...], ...]
    shifts: tuple[int, ...]  # d_0 = 0, d_1, ..., d_k
    levels: tuple[tuple[Cycle, ...], ...]
    spectra: tuple[CycleSet, ...]
    gap_condition: bool
    disjoint: bool
    total_spectrum_size: int

    @property
    def k(self) -> int:
        return len(self.S_chain)

    @property
    def bound(self) -> int:
        return (self.k + 1) * (len(self.A) - 1)

    def to_dict(self) -> dict:
        return {
            "f": [self.f.a, self.f.b],
            "A": [[c.a, c.b] for c in self.A],
            "I": [[c.a, c.b] for c in self.I],
            "x": self.x,
            "L": self.L,
            "k": self.k,
            "shifts": list(self.shifts),
            "level_spectra": [s.sorted() for s in self.spectra],
            "gap_condition": self.gap_condition,
            "disjoint": self.disjoint,
            "total_spectrum_size": self.total_spectrum_size,
            "bound": self.bound,
        }


def window_exclude(I: Sequence[Chord], ell: int) -> tuple[Chord, ...]:
    """Keep ``e_1 .. e_{l-3}`` and ``e_{l+3} ..`` (1-based ``l``; ``ell`` is 0-based)."""
    I = sorted(I, key=lambda e: e.a)
    return tuple(e for j, e in enumerate(I) if j <= ell - 3 or j >= ell + 3)


def shifted_spectra(n: int, f, A: Iterable, I: Iterable, L: int,
                    limits: Limits = DEFAULT_LIMITS) -> Case2Witness:
    """Shift the cycles through ``f`` and the antichain ``A`` by nested blocks of independent chords.

    Level 0 holds, for each ``e in A - {f}``, the cycle through ``f`` and ``e``
    that runs around the outside of H (it contains every label left of ``a_f``
    and right of ``b_e``), so each usable independent chord can shortcut it.
    Level ``i`` shortcuts every level-0 cycle by the first ``5i`` usable chords.
    """
    f = as_chord(f)
    A = _chords(A)
    if f not in A:
        raise ValueError(f"{f} is not in A")
    if min(e.a for e in A) != f.a:
        raise ValueError(f"{f} does not have the smallest left endpoint in A")
    for e, g in combinations(A, 2):
        if pair_kind(e, g) != CROSSING:
            raise ValueError(f"{e} and {g} do not cross")
    x = max(e.a for e in A)
    if x > min(e.b for e in A):
        raise ValueError("chords of A have no common point")
    off = [e for e in A if not L <= e.span < 2 * L]
    if off:
        raise ValueError(f"chords {off} are outside the dyadic class [{L}, {2 * L})")
    right = max(e.b for e in A)
    I = sorted(_chords(I), key=lambda e: e.a)
    if not is_independent(I):
        raise ValueError("I is not independent")
    usable = [e for e in I if e.b < f.a or e.a > right]
    k = len(usable) // 5
    if k == 0:
        raise InfeasibleError(f"only {len(usable)} usable independent chords; need at least 5")

    base = tuple(crossing_complement(n, f, e) for e in A if e != f)
    chain = tuple(tuple(usable[:5 * i]) for i in range(1, k + 1))
    shifts = (0,) + tuple(sum(e.gap for e in S) for S in chain)
    levels = [base]
    for S in chain:
        level = []
        for c in base:
            for e in S:
                c = shortcut(c, e)
            level.append(c)
        levels.append(tuple(level))
    spectra = tuple(CycleSet.of(n, (len(c) for c in level)) for level in levels)
    for level, d in zip(levels, shifts):
        assert [len(c) for c in level] == [len(c) - d for c in base]

    gap_condition = all(b - a > 4 * L for a, b in zip(shifts, shifts[1:]))
    disjoint = all((s.mask & t.mask) == 0 for s, t in combinations(spectra, 2))
    if gap_condition and not disjoint:
        raise AssertionError("levels overlap although the shifts are more than 4L apart")
    total = len(spectrum(LabelledHamGraph(n, tuple(A) + tuple(I)), limits))
    return Case2Witness(n, f, tuple(A), tuple(usable), x, L, chain, shifts,
                        tuple(levels), spectra, gap_condition, disjoint, total)


# -- per-graph encoding for the many-chord, few-independent branch -----------

@dataclass(frozen=True)
class PhiResult:
    case: int
    F: tuple[Chord, ...]
    L: int
    I: tuple[Chord, ...]
    pierce: Pierce
    Z: tuple[Chord, ...]
    A: tuple[Chord, ...]
    fingerprint: FingerprintResult | None = None
    witness: Case2Witness | None = None

    def to_dict(self) -> dict:
        out = {
            "case": self.case,
            "F": [[c.a, c.b] for c in self.F],
            "L": self.L,
            "x": self.pierce.x,
            "chain_size": len(self.Z),
            "antichain_size": len(self.A),
        }
        if self.fingerprint is not None:
            out["fingerprint"] = self.fingerprint.to_dict()
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def phi_encode(g: LabelledHamGraph, p: int, K: int = 1,
               limits: Limits = DEFAULT_LIMITS) -> PhiResult:
    """Chord subset ``F`` of a graph without many independent chords, with its certificate.

    Raises :class:`InfeasibleError` when a step needs more chords than a small
    instance has (fingerprints need four chords, shifting needs five usable
    independent chords).
    """
    cls = classify(g, p, K)
    if cls.kind != "H2":
        raise ValueError("graph has many independent chords; use psi_encode")
    L, R = dyadic_class(g.chords, g.n)
    I = max_independent(R)
    pc = pierce_set(R, I)
    Z, A = chain_antichain(pc.X, pc.x)
    tau = cls.threshold
    if len(Z) >= tau or len(A) >= tau:
        Y = (Z if len(Z) >= len(A) else A)[:max(tau, 4)]
        if len(Y) < 4:
            raise InfeasibleError(f"largest chain/antichain has {len(Y)} chords; fingerprint needs 4")
        fp = fingerprint(g.n, Y, limits)
        return PhiResult(1, fp.F, L, I, pc, Z, A, fingerprint=fp)
    f = min(A, key=lambda e: (e.a, e.b))
    usable = window_exclude(I, pc.index)
    w = shifted_spectra(g.n, f, A, usable, L, limits)
    return PhiResult(2, tuple(sorted(set(A) | set(I))), L, I, pc, Z, A, witness=w)


# -- container families -----------------------------------------------------

@dataclass(frozen=True)
class ContainerFamily:
    n: int
    members: tuple[CycleSet, ...]
    provenance: tuple[tuple[tuple[Chord, ...], ...], ...]
    floor: int = 0
    hypothesis: tuple[str, int] | None = None  # ("max_degree", p) or ("edges", p)

    def __post_init__(self):
        small = [m for m in self.members if len(m) < self.floor]
        if small:
            raise ValueError(f"members {small} are below the size floor {self.floor}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "floor": self.floor,
            "hypothesis": list(self.hypothesis) if self.hypothesis else None,
            "members": [m.sorted() for m in self.members],
            "provenance": [[[[c.a, c.b] for c in F] for F in prov] for prov in self.provenance],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ContainerFamily":
        n = d["n"]
        prov = tuple(tuple(tuple(Chord(a, b) for a, b in F) for F in p)
                     for p in d.get("provenance") or [[] for _ in d["members"]])
        hyp = d.get("hypothesis")
        return cls(n, tuple(CycleSet.of(n, m) for m in d["members"]), prov,
                   d.get("floor", 0), tuple(hyp) if hyp else None)


def all_chords(n: int) -> list[Chord]:
    return [Chord(a, b) for a in range(1, n + 1) for b in range(a + 2, n + 1)
            if not (a == 1 and b == n)]


def family_prime(n: int, p: int, limits: Limits = DEFAULT_LIMITS) -> ContainerFamily:
    """Every cycle set ``S(H + F)`` with ``|F| = ceil(sqrt(p - 2))`` and ``|S| >= ceil((p - 2)/24)``."""
    if p < 3:
        raise ValueError(f"need p >= 3, got {p}")
    size = ceil_sqrt(p - 2)
    floor = -(-(p - 2) // 24)
    pool = all_chords(n)
    count = math.comb(len(pool), size)
    if n > limits.max_family_n or size > limits.max_family_chords:
        raise LimitExceeded(
            f"family enumeration refused: C({len(pool)}, {size}) = {count} chord sets"
            f" (n={n}, |F|={size}; limits n<={limits.max_family_n},"
            f" |F|<={limits.max_family_chords})")
    found: dict[CycleSet, list[tuple[Chord, ...]]] = {}
    for F in combinations(pool, size):
        S = spectrum(LabelledHamGraph(n, F), limits)
        if len(S) >= floor:
            found.setdefault(S, []).append(F)
    members = sorted(found, key=lambda s: (len(s), s.sorted()))
    return ContainerFamily(n, tuple(members), tuple(tuple(found[m]) for m in members),
                           floor, ("max_degree", p))


def weight_sum(fam: ContainerFamily) -> Fraction:
    """Exact ``sum(2 ** -|S|)`` over the family."""
    return sum((Fraction(1, 1 << len(S)) for S in fam.members), Fraction(0))


def _meets(fam: ContainerFamily, g: LabelledHamGraph) -> str | None:
    if fam.hypothesis is None:
        return None
    kind, p = fam.hypothesis
    if kind == "max_degree" and g.max_degree() < p:
        return f"maximum degree {g.max_degree()} < {p}"
    if kind == "edges" and g.num_edges < g.n + p:
        return f"{g.num_edges} edges < n + p = {g.n + p}"
    return None


def cover_check(fam: ContainerFamily, graphs: Iterable[LabelledHamGraph],
                limits: Limits = DEFAULT_LIMITS) -> tuple[bool, list[dict]]:
    """Check every graph's spectrum contains some family member.

    Returns ``(ok, failures)``; each failure is ``{"index", "reason"}``.
    """
    masks = sorted({m.mask for m in fam.members}, key=lambda m: bin(m).count("1"))
    failures = []
    for i, g in enumerate(graphs):
        if g.n != fam.n:
            failures.append({"index": i, "reason": f"graph has n={g.n}, family has n={fam.n}"})
            continue
        why = _meets(fam, g)
        if why:
            failures.append({"index": i, "reason": f"hypothesis violated: {why}"})
            continue
        s = spectrum(g, limits).mask
        if not any(m & ~s == 0 for m in masks):
            failures.append({"index": i, "reason": "no family member inside the spectrum"})
    return not failures, failures
