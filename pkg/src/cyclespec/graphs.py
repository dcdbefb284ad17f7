"""Value types: chords, labelled Hamiltonian graphs, general graphs and cycle sets.

Vertex labels are 1-based.  A :class:`LabelledHamGraph` on ``n`` vertices always
contains the Hamilton cycle ``1, 2, ..., n, 1``; only the chords are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


def classify_pair(n: int, a: int, b: int) -> str:
    """Classify a vertex pair of the ``n``-cycle as ``"chord"``, ``"hamilton"`` or ``"invalid"``."""
    if a > b:
        a, b = b, a
    if a < 1 or b > n or a == b:
        return "invalid"
    if b == a + 1 or (a == 1 and b == n):
        return "hamilton"
    return "chord"


@dataclass(frozen=True, order=True)
class Chord:
    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise GraphError(f"chord ({self.a},{self.b}) needs a < b")
        if self.b < self.a + 2:
            raise GraphError(f"({self.a},{self.b}) is a Hamilton edge, not a chord")

    @property
    def gap(self) -> int:
        return self.b - self.a - 1

    @property
    def span(self) -> int:
        return self.b - self.a

    def check(self, n: int) -> None:
        kind = classify_pair(n, self.a, self.b)
        if kind == "hamilton":
            raise GraphError(f"({self.a},{self.b}) is a Hamilton edge for n={n}, not a chord")
        if kind == "invalid":
            raise GraphError(f"({self.a},{self.b}) is not a valid chord for n={n}")

    def contains(self, x: int) -> bool:
        return self.a <= x <= self.b

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"({self.a},{self.b})"


def chord_gap(e: Chord) -> int:
    """Number of interior labels ``a+1, ..., b-1`` skipped by ``e``."""
    return e.b - e.a - 1


def as_chord(pair) -> Chord:
    if isinstance(pair, Chord):
        return pair
    a, b = pair
    return Chord(min(a, b), max(a, b))


def chord_tuple(chords: Iterable) -> tuple[Chord, ...]:
    """Canonical sorted, de-duplicated tuple of chords."""
    return tuple(sorted({as_chord(c) for c in chords}))


@dataclass(frozen=True)
class LabelledHamGraph:
    n: int
    chords: tuple[Chord, ...] = ()

    def __post_init__(self):
        if self.n < 3:
            raise GraphError(f"need n >= 3, got {self.n}")
        canon = chord_tuple(self.chords)
        for c in canon:
            c.check(self.n)
        object.__setattr__(self, "chords", canon)

    @property
    def num_edges(self) -> int:
        return self.n + len(self.chords)

    def degree(self, v: int) -> int:
        return 2 + sum(1 for c in self.chords if v in (c.a, c.b))

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(1, self.n + 1))

    def with_chords(self, chords: Iterable) -> "LabelledHamGraph":
        return LabelledHamGraph(self.n, tuple(chords))

    def edges(self) -> list[tuple[int, int]]:
        ham = [(i, i + 1) for i in range(1, self.n)] + [(1, self.n)]
        return sorted(ham + [(c.a, c.b) for c in self.chords])


def make_ham_graph(n: int, chords: Iterable = ()) -> LabelledHamGraph:
    """Validate ``chords`` against ``n`` and build the graph; duplicates collapse."""
    if n < 3:
        raise GraphError(f"need n >= 3, got {n}")
    out = []
    for pair in chords:
        a, b = pair
        kind = classify_pair(n, a, b)
        if kind == "hamilton":
            raise GraphError(f"({a},{b}) is a Hamilton edge for n={n}, not a chord")
        if kind == "invalid":
            raise GraphError(f"({a},{b}) is not a valid chord for n={n}")
        out.append(Chord(min(a, b), max(a, b)))
    return LabelledHamGraph(n, tuple(out))


def rotate_labels(g: LabelledHamGraph, v: int) -> LabelledHamGraph:
    """Relabel ``i -> ((i - v) mod n) + 1`` so vertex ``v`` becomes 1.

    The Hamilton cycle is mapped onto itself, so the result is isomorphic to ``g``.
    """
    n = g.n

    def f(i):
        return (i - v) % n + 1

    return make_ham_graph(n, [(f(c.a), f(c.b)) for c in g.chords])


@dataclass(frozen=True)
class GeneralGraph:
    """Simple undirected graph on ``{1, ..., n}``; ``adj[v]`` is a bitmask over labels."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "GeneralGraph":
        adj = [0] * (n + 1)
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(1, self.n + 1) for v in range(u + 1, self.n + 1)
                if self.adj[u] >> v & 1]

    @property
    def num_edges(self) -> int:
        return sum(bin(m).count("1") for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(1, self.n + 1)), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def induced(self, vertices: Sequence[int]) -> "GeneralGraph":
        """Induced subgraph, relabelled ``1..k`` in the order given."""
        index = {v: i + 1 for i, v in enumerate(vertices)}
        es = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return GeneralGraph.from_edges(len(vertices), es)


def to_general(g: LabelledHamGraph) -> GeneralGraph:
    return GeneralGraph.from_edges(g.n, g.edges())


@dataclass(frozen=True, order=True)
class CycleSet:
    """Subset of ``{3, ..., n}``, stored as a bitmask (bit ``l`` set iff ``l`` is a member)."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask & 0b111 or self.mask >> (self.n + 1):
            raise GraphError(f"cycle set for n={self.n} has members outside 3..{self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "CycleSet":
        m = 0
        for x in members:
            m |= 1 << x
        return cls(n, m)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, length) -> bool:
        return length >= 0 and bool(self.mask >> length & 1)

    def issubset(self, other: "CycleSet") -> bool:
        return self.mask & ~other.mask == 0

    def __or__(self, other: "CycleSet") -> "CycleSet":
        return CycleSet(max(self.n, other.n), self.mask | other.mask)

    def __and__(self, other: "CycleSet") -> "CycleSet":
        return CycleSet(min(self.n, other.n), self.mask & other.mask)

    def __sub__(self, other: "CycleSet") -> "CycleSet":
        return CycleSet(self.n, self.mask & ~other.mask)

    def restrict(self, lo: int, hi: int) -> "CycleSet":
        """Members in the closed range ``[lo, hi]``."""
        window = ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1) if hi >= lo else 0
        return CycleSet(self.n, self.mask & window)

    def sorted(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"CycleSet(n={self.n}, {self.sorted()})"


@dataclass(frozen=True)
class Cycle:
    """Cyclic vertex sequence; orientation and starting point are as constructed."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) < 3:
            raise GraphError(f"a cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise GraphError(f"repeated vertex in cycle {vs}")
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        vs = self.vertices
        return frozenset(tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs)))

    def is_in(self, edges: Iterable[tuple[int, int]]) -> bool:
        es = {tuple(sorted(e)) for e in edges}
        return self.edge_set() <= es


# -- text formats -----------------------------------------------------------

def parse_ham(text: str) -> LabelledHamGraph:
    """Parse ``n`` on the first line followed by ``a b`` per chord.  ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphError("empty graph description")
    lineno, head = rows[0]
    if len(head) != 1:
        raise GraphError(f"line {lineno}: expected a single vertex count")
    n = int(head[0])
    pairs = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'a b', got {' '.join(parts)!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return make_ham_graph(n, pairs)


def format_ham(g: LabelledHamGraph) -> str:
    return "\n".join([str(g.n)] + [f"{c.a} {c.b}" for c in g.chords]) + "\n"


def read_ham(path) -> LabelledHamGraph:
    with open(path) as fh:
        return parse_ham(fh.read())


def parse_graph6(line: str) -> GeneralGraph:
    """Decode one graph6 line into a :class:`GeneralGraph` (graph6 vertex ``i`` becomes ``i + 1``)."""
    import networkx as nx

    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as exc:
        raise GraphError(f"malformed graph6 {s!r}: {exc}") from None
    return GeneralGraph.from_edges(G.number_of_nodes(), [(u + 1, v + 1) for u, v in G.edges()])


def format_graph6(g: GeneralGraph) -> str:
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from((u - 1, v - 1) for u, v in g.edges())
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


def read_graph6(path) -> Iterator[GeneralGraph]:
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except GraphError as exc:
                raise GraphError(f"line {lineno}: {exc}") from None


def parse_ham_many(text: str) -> list[LabelledHamGraph]:
    """Several graphs in the ``n`` / ``a b`` format, separated by blank lines."""
    blocks, cur = [], []
    for line in text.splitlines():
        if line.split("#", 1)[0].strip():
            cur.append(line)
        elif cur:
            blocks.append("\n".join(cur))
            cur = []
    if cur:
        blocks.append("\n".join(cur))
    return [parse_ham(b) for b in blocks]
