"""Small-n census of distinct cycle sets, the Faudree construction and the four-family cover.

Exhaustive mode scans all ``2^C(n,2)`` labelled graphs.  Each graph is an edge
bitmask and its spectrum is assembled with numpy by testing every cycle of
``K_n`` (as an edge mask) for containment.  Stream mode reads graph6 lines,
split into fixed line-range shards that can run in worker processes and be
checkpointed to disk.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_LIMITS, LimitExceeded, Limits
from .cycles import general_spectrum, longest_cycle
from .graphs import CycleSet, GeneralGraph, GraphError, parse_graph6

EXHAUSTIVE = "exhaustive-labeled"
STREAM = "graph6-stream"

CHUNK = 1 << 18
TEMPLATE_MAX_N = 8


# -- vectorised spectra ------------------------------------------------------

def edge_index(n: int) -> dict[tuple[int, int], int]:
    """Bit position of each edge ``(u, v)``, ``1 <= u < v <= n``, in an edge mask."""
    return {e: i for i, e in enumerate(combinations(range(1, n + 1), 2))}


@lru_cache(maxsize=None)
def cycle_templates(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Edge masks and lengths of every cycle of ``K_n``, each listed once."""
    idx = edge_index(n)
    masks, lengths = [], []
    for k in range(3, n + 1):
        for vs in combinations(range(1, n + 1), k):
            s, rest = vs[0], vs[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cyc = (s,) + perm
                m = 0
                for i in range(k):
                    u, v = cyc[i], cyc[(i + 1) % k]
                    m |= 1 << idx[(u, v) if u < v else (v, u)]
                masks.append(m)
                lengths.append(k)
    return np.array(masks, dtype=np.uint64), np.array(lengths, dtype=np.uint64)


def batch_spectra(n: int, graphs: np.ndarray) -> np.ndarray:
    """Spectrum bitmasks (bit ``l`` for length ``l``) of an array of edge masks."""
    graphs = np.asarray(graphs, dtype=np.uint64)
    out = np.zeros(graphs.shape, dtype=np.uint64)
    if n < 3:
        return out
    masks, lengths = cycle_templates(n)
    one = np.uint64(1)
    for m, k in zip(masks, lengths):
        out[(graphs & m) == m] |= one << k
    return out


def graph_mask(g: GeneralGraph) -> int:
    idx = edge_index(g.n)
    m = 0
    for e in g.edges():
        m |= 1 << idx[e]
    return m


def mask_graph(n: int, mask: int) -> GeneralGraph:
    return GeneralGraph.from_edges(n, [e for e, i in edge_index(n).items() if mask >> i & 1])


# -- records ----------------------------------------------------------------

@dataclass(frozen=True)
class CensusRecord:
    n: int
    graphs_scanned: int
    distinct_sets: tuple[CycleSet, ...]
    source: str

    @property
    def count(self) -> int:
        return len(self.distinct_sets)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "source": self.source,
            "graphs_scanned": self.graphs_scanned,
            "count": self.count,
            "distinct_sets": [s.sorted() for s in self.distinct_sets],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        sets = tuple(CycleSet.of(d["n"], s) for s in d["distinct_sets"])
        rec = cls(d["n"], d["graphs_scanned"], sets, d["source"])
        if "count" in d and d["count"] != rec.count:
            raise ValueError(f"census file says count={d['count']} but lists {rec.count} sets")
        return rec

    def to_csv(self) -> str:
        return "".join(",".join(map(str, s.sorted())) + "\n" for s in self.distinct_sets)


def _record(n: int, scanned: int, masks: Iterable[int], source: str) -> CensusRecord:
    sets = tuple(CycleSet(n, int(m)) for m in sorted(set(int(m) for m in masks)))
    return CensusRecord(n, scanned, sets, source)


# -- exhaustive mode --------------------------------------------------------

def _exhaustive_chunk(args) -> list[int]:
    n, lo, hi = args
    graphs = np.arange(lo, hi, dtype=np.uint64)
    return [int(m) for m in np.unique(batch_spectra(n, graphs))]


def _map(fn, items: list, jobs: int):
    """Yield ``fn(x)`` for each item, in order, as results become available."""
    if jobs <= 1 or len(items) <= 1:
        for x in items:
            yield fn(x)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items)


def census_exhaustive(n: int, jobs: int = 1, limits: Limits = DEFAULT_LIMITS) -> CensusRecord:
    if n > limits.max_census_n:
        raise LimitExceeded(
            f"exhaustive census refused: n={n} exceeds max_census_n={limits.max_census_n}"
            f" (2^{math.comb(n, 2)} labelled graphs)")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = 1 << math.comb(n, 2)
    chunks = [(n, lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]
    found: set[int] = set()
    for part in _map(_exhaustive_chunk, chunks, jobs):
        found.update(part)
    return _record(n, total, found, EXHAUSTIVE)


# -- stream mode --------------------------------------------------------------

def _stream_shard(args) -> dict:
    path, start, stop, n = args
    graphs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            if lineno <= start:
                continue
            if lineno > stop:
                break
            if not line.strip():
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                raise GraphError(f"line {lineno}: {exc}") from None
            if g.n != n:
                raise GraphError(f"line {lineno}: graph has {g.n} vertices, expected {n}")
            graphs.append(g)
    if n <= TEMPLATE_MAX_N:
        spectra = batch_spectra(n, np.array([graph_mask(g) for g in graphs], dtype=np.uint64))
        masks = {int(m) for m in spectra}
    else:
        masks = {general_spectrum(g, Limits(max_n_general=max(n, 1))).mask for g in graphs}
    return {"start": start, "stop": stop, "scanned": len(graphs), "masks": sorted(masks)}


def _first_graph_n(path) -> tuple[int, int]:
    """Vertex count of the first graph and the number of lines."""
    n = None
    lines = 0
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            lines = lineno
            if n is None and line.strip():
                try:
                    n = parse_graph6(line).n
                except GraphError as exc:
                    raise GraphError(f"line {lineno}: {exc}") from None
    if n is None:
        raise GraphError(f"{path}: no graphs")
    return n, lines


def _load_shard(path: Path) -> dict | None:
    """A finished shard record, or ``None`` if missing or unreadable (it is then recomputed)."""
    try:
        rec = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(rec, dict) or not isinstance(rec.get("masks"), list) or "scanned" not in rec:
        return None
    return rec


def census_stream(path, n: int | None = None, jobs: int = 1, checkpoint=None,
                  shard_lines: int = 4096, max_n: int = 11) -> CensusRecord:
    """Distinct cycle sets over the graphs of a graph6 file.

    With ``checkpoint`` set, finished shards are written there as JSON and
    skipped on the next run over the same file.
    """
    first_n, lines = _first_graph_n(path)
    n = first_n if n is None else n
    if n > max_n:
        raise LimitExceeded(f"stream census refused: n={n} exceeds {max_n}")
    shards = [(str(path), lo, min(lo + shard_lines, lines), n)
              for lo in range(0, lines, shard_lines)]
    done: dict[int, dict] = {}
    ckdir = Path(checkpoint) if checkpoint else None
    size = os.path.getsize(path)
    if ckdir:
        ckdir.mkdir(parents=True, exist_ok=True)
        for i, (_, lo, hi, _) in enumerate(shards):
            rec = _load_shard(ckdir / f"shard-{i:05d}.json")
            if rec and (rec.get("start"), rec.get("stop"), rec.get("n"), rec.get("file_size")) == (lo, hi, n, size):
                done[i] = rec
    todo = [i for i in range(len(shards)) if i not in done]
    for i, rec in zip(todo, _map(_stream_shard, [shards[i] for i in todo], jobs)):
        done[i] = rec
        if ckdir:
            tmp = ckdir / f"shard-{i:05d}.json.tmp"
            tmp.write_text(json.dumps({**rec, "n": n, "file_size": size}))
            os.replace(tmp, ckdir / f"shard-{i:05d}.json")
    scanned = sum(r["scanned"] for r in done.values())
    masks = set()
    for r in done.values():
        masks.update(r["masks"])
    return _record(n, scanned, masks, STREAM)


def census(n: int | None = None, source: str = EXHAUSTIVE, graph6=None, jobs: int = 1,
           checkpoint=None, limits: Limits = DEFAULT_LIMITS) -> CensusRecord:
    if source == EXHAUSTIVE:
        return census_exhaustive(n, jobs, limits)
    if source == STREAM:
        if graph6 is None:
            raise ValueError("stream census needs a graph6 file")
        return census_stream(graph6, n, jobs, checkpoint)
    raise ValueError(f"unknown census source {source!r}")


# -- Faudree construction ---------------------------------------------------

def faudree(n: int, A: Iterable[int]) -> GeneralGraph:
    """Path ``1 - 2 - ... - n`` plus the edges ``{1, a}`` for ``a in A``."""
    A = sorted(set(A))
    if n % 2:
        raise ValueError(f"the construction needs even n, got {n}")
    bad = [a for a in A if not n // 2 + 1 <= a <= n]
    if bad:
        raise ValueError(f"A must lie in {{{n // 2 + 1}, ..., {n}}}; got {bad}")
    edges = {(i, i + 1) for i in range(1, n)} | {(1, a) for a in A if a != 2}
    return GeneralGraph.from_edges(n, edges)


def upper_subsets(n: int):
    half = range(n // 2 + 1, n + 1)
    for r in range(len(half) + 1):
        yield from combinations(half, r)


def faudree_census(n: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Number of distinct spectra over all ``A`` in the upper half."""
    if n > 16 or n > limits.max_n_general:
        raise LimitExceeded(f"Faudree census refused: n={n} exceeds 16 or max_n_general")
    return len({general_spectrum(faudree(n, A), limits).mask for A in upper_subsets(n)})


# -- four-family cover ------------------------------------------------------

@dataclass(frozen=True)
class PartitionReport:
    n: int
    edges: int
    circumference: int
    G1: bool
    G2: bool
    G3: bool
    G4: bool
    thresholds: dict = field(compare=False, default_factory=dict)

    @property
    def covered(self) -> bool:
        return self.G1 or self.G2 or self.G3 or self.G4

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": self.edges, "circumference": self.circumference,
                "G1": self.G1, "G2": self.G2, "G3": self.G3, "G4": self.G4,
                "covered": self.covered}


def partition_thresholds(n: int) -> dict:
    lg = math.log2(n)
    return {
        "long_cycle": n - math.sqrt(n) / (4 * lg),
        "sparse_edges": n + n / (4 * lg),
        "degree": math.sqrt(n) / 4,
        "surplus": n / (8 * lg),
    }


def theorem_partition_check(g: GeneralGraph, limits: Limits = DEFAULT_LIMITS) -> PartitionReport:
    """Membership flags for the four families, with base-2 logarithms.

    ``G3`` and ``G4`` are tested on constructive witnesses only, never by a
    general search.  For a longest cycle ``C`` the ``G3`` candidates are
    ``G[C]`` and, for each vertex ``v`` off ``C`` with two or more neighbours on
    ``C``, the cycle ``v, c_i, ..., c_j`` between its first and last neighbour.
    ``G4`` is tested on ``G[C]``.
    """
    if g.n < 2:
        raise ValueError("partition thresholds need n >= 2")
    th = partition_thresholds(g.n)
    C = longest_cycle(g, limits)
    circ = len(C) if C else 0
    m = g.num_edges
    g1 = circ <= th["long_cycle"]
    g2 = not g1 and m <= th["sparse_edges"]
    g3 = g4 = False
    if C is not None:
        cyc = list(C.vertices)
        on = set(cyc)
        inner = g.induced(cyc)
        g3 = inner.max_degree() >= th["degree"]
        for v in range(1, g.n + 1):
            if g3:
                break
            if v in on:
                continue
            hits = [i for i, c in enumerate(cyc) if g.has_edge(v, c)]
            if len(hits) < 2:
                continue
            sub = g.induced([v] + cyc[hits[0]:hits[-1] + 1])
            if sub.max_degree() >= th["degree"]:
                g3 = True
        g4 = inner.num_edges >= len(cyc) + th["surplus"]
    return PartitionReport(g.n, m, circ, g1, g2, g3, g4, th)


# -- bounds -----------------------------------------------------------------

def bounds_report(rec: CensusRecord) -> dict:
    n = rec.n
    subsets = 1 << max(n - 2, 0)
    return {
        "n": n,
        "source": rec.source,
        "graphs_scanned": rec.graphs_scanned,
        "count": rec.count,
        "subset_bound": subsets,
        "faudree_floor": 1 << (n // 2),
        "ratio": rec.count / subsets,
        "log2_count": math.log2(rec.count) if rec.count else None,
    }


def write_graph6(graphs: Sequence[GeneralGraph], path) -> None:
    from .graphs import format_graph6

    with open(path, "w") as fh:
        for g in graphs:
            fh.write(format_graph6(g) + "\n")
