"""Exhaustive enumeration of strict colorings, spectra and feasible sets.

The search assigns vertices depth-first in a fixed order.  Each vertex
takes either a class already in use or the single next fresh class, so
every set partition is generated exactly once regardless of class
relabeling.  Per-edge counters (assigned vertices, distinct classes seen)
are maintained incrementally; a branch is abandoned the moment a fully
assigned C-edge has all its vertices in pairwise distinct classes or a
fully assigned D-edge is monochromatic.  For a 3-vertex bi-edge those two
checks fire exactly on the rainbow and monochromatic assignments.

Correctness is independent of the vertex order; the default order
(descending edge degree, ties by index) just makes the pruning bite early.
Found colorings are canonicalized to index order and reported sorted by
their encodings, so reports are deterministic, including when the search
tree is split across worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .model import MixedHypergraph, Partition

_SPLIT_DEPTH = 4  # tree levels explored before handing branches to workers


@dataclass(frozen=True)
class ChromaticSpectrum:
    """Counts of strict colorings per class count.

    ``counts[k-1]`` is the number of strict k-colorings, as unordered
    partitions.  Trailing zeros are trimmed, so the vector length is the
    upper chromatic number; a hypergraph with no strict coloring at all has
    an empty vector.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        if any(c < 0 for c in counts):
            raise ValueError("spectrum counts must be nonnegative")
        while counts and counts[-1] == 0:
            counts = counts[:-1]
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_class_counts(cls, class_counts: Iterable[int]) -> "ChromaticSpectrum":
        tally: dict[int, int] = {}
        for k in class_counts:
            tally[k] = tally.get(k, 0) + 1
        top = max(tally, default=0)
        return cls(tuple(tally.get(k, 0) for k in range(1, top + 1)))

    @property
    def upper_chromatic(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def feasible(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.counts, start=1) if c > 0)

    def r(self, k: int) -> int:
        return self.counts[k - 1] if 1 <= k <= len(self.counts) else 0


@dataclass(frozen=True)
class EnumerationReport:
    """Every strict coloring of a hypergraph, plus derived aggregates.

    ``colorings`` holds canonical partitions in lexicographic encoding
    order; when a collection limit was given it may be a prefix of the full
    list, but ``spectrum`` always counts everything.
    """

    colorings: tuple[Partition, ...]
    spectrum: ChromaticSpectrum
    feasible: tuple[int, ...]
    nodes_explored: int


class _Searcher:
    """Backtracking state: one instance per (hypergraph, vertex order)."""

    def __init__(self, h: MixedHypergraph, order: Sequence[int]):
        n = h.vertex_count
        merged: dict[tuple[int, ...], list[bool]] = {}
        for e in h.c_edges:
            merged.setdefault(e, [False, False])[0] = True
        for e in h.d_edges:
            merged.setdefault(e, [False, False])[1] = True
        items = sorted(merged.items())
        self.n = n
        self.order = tuple(order)
        self.everts = [e for e, _ in items]
        self.is_c = [flags[0] for _, flags in items]
        self.is_d = [flags[1] for _, flags in items]
        self.esize = [len(e) for e in self.everts]
        incident: list[list[int]] = [[] for _ in range(n)]
        for ei, e in enumerate(self.everts):
            for v in e:
                incident[v].append(ei)
        self.incident = incident
        self.labels = [-1] * n
        self.assigned = [0] * len(items)
        self.distinct = [0] * len(items)
        self.class_counts: list[dict[int, int]] = [{} for _ in items]
        self.nodes = 0

    def _assign(self, v: int, c: int) -> bool:
        ok = True
        for ei in self.incident[v]:
            cc = self.class_counts[ei]
            prev = cc.get(c, 0)
            cc[c] = prev + 1
            self.assigned[ei] += 1
            if prev == 0:
                self.distinct[ei] += 1
            if self.assigned[ei] == self.esize[ei]:
                d = self.distinct[ei]
                if (self.is_c[ei] and d == self.esize[ei]) or (self.is_d[ei] and d == 1):
                    ok = False
        self.labels[v] = c
        return ok

    def _unassign(self, v: int, c: int) -> None:
        for ei in self.incident[v]:
            cc = self.class_counts[ei]
            if cc[c] == 1:
                del cc[c]
                self.distinct[ei] -= 1
            else:
                cc[c] -= 1
            self.assigned[ei] -= 1
        self.labels[v] = -1

    def apply_prefix(self, prefix: Sequence[int]) -> bool:
        """Install class choices for the first vertices of the order, uncounted."""
        ok = True
        for pos, c in enumerate(prefix):
            ok = self._assign(self.order[pos], c) and ok
        return ok

    def colorings(self, depth: int = 0, used: int = 0) -> Iterator[Partition]:
        """Yield every proper coloring extending the current assignment."""
        if depth == self.n:
            yield Partition(tuple(self.labels))
            return
        v = self.order[depth]
        for c in range(used + 1):
            self.nodes += 1
            if self._assign(v, c):
                yield from self.colorings(depth + 1, used + (1 if c == used else 0))
            self._unassign(v, c)

    def prefixes(self, split_depth: int, depth: int = 0, used: int = 0) -> Iterator[tuple[int, ...]]:
        """Yield surviving class-choice prefixes of the first ``split_depth`` vertices."""
        if depth == split_depth:
            yield tuple(self.labels[self.order[pos]] for pos in range(split_depth))
            return
        v = self.order[depth]
        for c in range(used + 1):
            self.nodes += 1
            if self._assign(v, c):
                yield from self.prefixes(split_depth, depth + 1, used + (1 if c == used else 0))
            self._unassign(v, c)


def default_vertex_order(h: MixedHypergraph) -> tuple[int, ...]:
    """Descending edge degree, ties by index."""
    degree = [0] * h.vertex_count
    for e in set(h.c_edges) | set(h.d_edges):
        for v in e:
            degree[v] += 1
    return tuple(sorted(range(h.vertex_count), key=lambda v: (-degree[v], v)))


def _resolve_order(h: MixedHypergraph, order: Sequence[int] | None) -> tuple[int, ...]:
    if order is None:
        return default_vertex_order(h)
    order = tuple(order)
    if sorted(order) != list(range(h.vertex_count)):
        raise ValueError("order must be a permutation of the vertex indices")
    return order


def iter_strict_colorings(h: MixedHypergraph,
                          order: Sequence[int] | None = None) -> Iterator[Partition]:
    """Lazily yield strict colorings in search order; each partition appears exactly once."""
    if h.vertex_count == 0:
        return iter(())
    return _Searcher(h, _resolve_order(h, order)).colorings()


def _expand_prefix(payload: tuple) -> tuple[list[tuple[int, ...]], int]:
    vertex_count, c_edges, d_edges, order, prefix = payload
    searcher = _Searcher(MixedHypergraph(vertex_count, c_edges, d_edges), order)
    if not searcher.apply_prefix(prefix):
        raise AssertionError("worker received a pruned prefix")
    used = max(prefix) + 1 if prefix else 0
    found = [p.labels for p in searcher.colorings(depth=len(prefix), used=used)]
    return found, searcher.nodes


def enumerate_strict_colorings(h: MixedHypergraph,
                               limit: int | None = None,
                               order: Sequence[int] | None = None,
                               threads: int = 1) -> EnumerationReport:
    """Enumerate all strict colorings of ``h`` as canonical set partitions.

    Parameters
    ----------
    h:
        Normalized mixed hypergraph.
    limit:
        Caps how many colorings are collected in the report; counting for
        the spectrum always covers everything.
    order:
        Optional vertex order override; any permutation yields the same
        coloring set.
    threads:
        Worker processes.  The search tree is split at a fixed shallow
        depth and the pieces explored independently; reports are identical
        for any worker count.
    """
    if h.vertex_count == 0:
        return EnumerationReport((), ChromaticSpectrum(()), (), 0)
    resolved = _resolve_order(h, order)

    if threads <= 1 or h.vertex_count < 2:
        searcher = _Searcher(h, resolved)
        found = list(searcher.colorings())
        nodes = searcher.nodes
    else:
        split_depth = min(_SPLIT_DEPTH, h.vertex_count - 1)
        splitter = _Searcher(h, resolved)
        prefix_list = list(splitter.prefixes(split_depth))
        payloads = [(h.vertex_count, h.c_edges, h.d_edges, resolved, p) for p in prefix_list]
        nodes = splitter.nodes
        found = []
        if payloads:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for labels_list, task_nodes in pool.map(_expand_prefix, payloads):
                    found.extend(Partition(labels) for labels in labels_list)
                    nodes += task_nodes

    found.sort(key=lambda p: p.labels)
    spectrum = ChromaticSpectrum.from_class_counts(p.class_count for p in found)
    collected = tuple(found if limit is None else found[:limit])
    return EnumerationReport(collected, spectrum, spectrum.feasible, nodes)


def chromatic_spectrum(h: MixedHypergraph, threads: int = 1) -> ChromaticSpectrum:
    return enumerate_strict_colorings(h, threads=threads).spectrum


def feasible_set(h: MixedHypergraph, threads: int = 1) -> tuple[int, ...]:
    return enumerate_strict_colorings(h, threads=threads).feasible


@dataclass(frozen=True)
class OneRealizationCertificate:
    """Outcome of a one-realization check, with the evidence that decides it.

    On success ``witnesses`` holds exactly one strict coloring per target
    class count.  On failure ``failure`` describes the first violation
    found and ``counterexamples`` carries the partitions exhibiting it
    (two colorings with the same class count, or one with a class count
    outside the target set; empty when a target count is simply missing).
    """

    ok: bool
    target: tuple[int, ...]
    witnesses: tuple[Partition, ...] = ()
    failure: str | None = None
    counterexamples: tuple[Partition, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_one_realization(h: MixedHypergraph, target: Iterable[int],
                       order: Sequence[int] | None = None) -> OneRealizationCertificate:
    """Whether the feasible set of ``h`` is exactly ``target`` with one coloring per count.

    The enumeration stops as soon as a refutation is certain: a second
    coloring at some class count, or any coloring whose class count lies
    outside the target set.
    """
    wanted = sorted(set(target))
    if not wanted or wanted[0] < 1:
        raise ValueError("target must be a nonempty set of integers >= 1")
    goal = tuple(wanted)
    wanted_set = set(wanted)
    seen: dict[int, Partition] = {}
    for p in iter_strict_colorings(h, order):
        k = p.class_count
        if k not in wanted_set:
            return OneRealizationCertificate(
                False, goal,
                failure=f"a strict {k}-coloring exists but {k} is not in the target set",
                counterexamples=(p,))
        if k in seen:
            return OneRealizationCertificate(
                False, goal,
                failure=f"two distinct strict {k}-colorings exist",
                counterexamples=(seen[k], p))
        seen[k] = p
    missing = [k for k in goal if k not in seen]
    if missing:
        return OneRealizationCertificate(
            False, goal,
            failure=f"no strict k-coloring exists for k in {missing}")
    return OneRealizationCertificate(
        True, goal, witnesses=tuple(seen[k] for k in goal))
