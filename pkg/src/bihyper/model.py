"""Value types for mixed hypergraphs and set-partition colorings.

Vertices are dense integer indices ``0..n-1``.  A mixed hypergraph carries
two edge families over them: C-edges, satisfied by a coloring when at least
two of their vertices share a class, and D-edges, satisfied when at least
two of their vertices lie in different classes.  An edge present in both
families is a bi-edge; when the families coincide the structure is a
bi-hypergraph.  Colorings are unordered set partitions, stored in a
canonical restricted-growth encoding so equal partitions compare equal.

Everything here is an immutable value; instances may be shared freely
between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class ImproperColoringError(ValueError):
    """An operation requiring a proper coloring received an improper one."""


def _normalize_family(family: Iterable[Iterable[int]], vertex_count: int,
                      kind: str) -> tuple[tuple[int, ...], ...]:
    edges: set[tuple[int, ...]] = set()
    for raw in family:
        verts = list(raw)
        if len(set(verts)) != len(verts):
            raise ValueError(f"{kind}-edge {verts}: repeated vertex inside the edge")
        if len(verts) < 2:
            raise ValueError(f"{kind}-edge {verts}: an edge needs at least 2 vertices")
        for v in verts:
            if not (0 <= v < vertex_count):
                raise ValueError(
                    f"{kind}-edge {sorted(verts)}: vertex {v} out of range for "
                    f"vertex_count={vertex_count}")
        edges.add(tuple(sorted(verts)))
    return tuple(sorted(edges))


@dataclass(frozen=True)
class MixedHypergraph:
    """A vertex count plus C-edge and D-edge families, in normalized form.

    Edges are strictly increasing index tuples and each family is sorted
    lexicographically with no duplicates; use :func:`build_hypergraph` to
    normalize and validate arbitrary input.
    """

    vertex_count: int
    c_edges: tuple[tuple[int, ...], ...] = ()
    d_edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for kind, family in (("C", self.c_edges), ("D", self.d_edges)):
            if family != _normalize_family(family, self.vertex_count, kind):
                raise ValueError(
                    f"{kind}-edge family is not normalized; build with build_hypergraph()")

    def is_bi(self) -> bool:
        return self.c_edges == self.d_edges

    def is_3_uniform(self) -> bool:
        return all(len(e) == 3 for e in self.c_edges + self.d_edges)

    @property
    def bi_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edges present in both families."""
        d = set(self.d_edges)
        return tuple(e for e in self.c_edges if e in d)


def build_hypergraph(vertex_count: int,
                     c_edges: Iterable[Iterable[int]] = (),
                     d_edges: Iterable[Iterable[int]] = ()) -> MixedHypergraph:
    """Validate, deduplicate and sort the edge families into a hypergraph."""
    return MixedHypergraph(
        vertex_count,
        _normalize_family(c_edges, vertex_count, "C"),
        _normalize_family(d_edges, vertex_count, "D"),
    )


def build_bi_hypergraph(vertex_count: int,
                        edges: Iterable[Iterable[int]]) -> MixedHypergraph:
    """Build a hypergraph whose C- and D-families are the same edge set."""
    family = _normalize_family(edges, vertex_count, "bi")
    return MixedHypergraph(vertex_count, family, family)


def induced_subhypergraph(
        h: MixedHypergraph,
        subset: Iterable[int]) -> tuple[MixedHypergraph, dict[int, int]]:
    """Restrict ``h`` to ``subset``, keeping edges entirely inside it.

    Vertices are reindexed against the sorted subset; the returned dict
    translates old indices to new ones.
    """
    keep = sorted(set(subset))
    for v in keep:
        if not (0 <= v < h.vertex_count):
            raise ValueError(f"subset vertex {v} out of range for vertex_count={h.vertex_count}")
    old_to_new = {v: i for i, v in enumerate(keep)}
    inside = old_to_new.keys()

    def translate(family: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(
            tuple(old_to_new[v] for v in e) for e in family
            if all(v in inside for v in e)))

    sub = MixedHypergraph(len(keep), translate(h.c_edges), translate(h.d_edges))
    return sub, old_to_new


@dataclass(frozen=True)
class Partition:
    """A set partition of ``0..n-1`` in canonical restricted-growth form.

    ``labels[v]`` is the class of vertex ``v``; scanning vertices in index
    order, each new class first appears as the smallest unused label.  Any
    label sequence is canonicalized on construction, so two Partition
    values are equal iff they denote the same set partition.
    """

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("a partition needs at least one vertex")
        relabel: dict[object, int] = {}
        for x in self.labels:
            if x not in relabel:
                relabel[x] = len(relabel)
        object.__setattr__(self, "labels", tuple(relabel[x] for x in self.labels))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]]) -> "Partition":
        """Build from explicit classes, which must partition 0..n-1."""
        assignment: dict[int, int] = {}
        for label, cl in enumerate(classes):
            members = list(cl)
            if not members:
                raise ValueError("empty class in partition")
            for v in members:
                if v in assignment:
                    raise ValueError(f"vertex {v} appears in two classes")
                assignment[v] = label
        n = len(assignment)
        if set(assignment) != set(range(n)):
            raise ValueError("classes do not cover a dense vertex range 0..n-1")
        return cls(tuple(assignment[v] for v in range(n)))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def class_count(self) -> int:
        return max(self.labels) + 1

    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.class_count)]
        for v, c in enumerate(self.labels):
            out[c].append(v)
        return tuple(tuple(cl) for cl in out)

    def merge_classes(self, a: int, b: int) -> "Partition":
        """Union classes ``a`` and ``b``; the class count drops by exactly one."""
        k = self.class_count
        for label in (a, b):
            if not (0 <= label < k):
                raise ValueError(f"unknown class label {label} (classes are 0..{k - 1})")
        if a == b:
            raise ValueError("cannot merge a class with itself")
        return Partition(tuple(a if c == b else c for c in self.labels))

    def restrict(self, subset: Iterable[int]) -> "Partition":
        """The induced partition of ``subset``, reindexed against its sorted order."""
        keep = sorted(set(subset))
        if not keep:
            raise ValueError("cannot restrict a partition to an empty subset")
        for v in keep:
            if not (0 <= v < self.size):
                raise ValueError(f"subset vertex {v} out of range")
        return Partition(tuple(self.labels[v] for v in keep))

    def __str__(self) -> str:
        return "{" + " | ".join(" ".join(str(v) for v in cl) for cl in self.classes()) + "}"


def is_proper(h: MixedHypergraph, partition: Partition) -> bool:
    """Whether every C-edge has a repeated class and every D-edge two distinct ones.

    For a 3-vertex bi-edge this is exactly: the edge meets two classes.
    """
    if partition.size != h.vertex_count:
        raise ValueError(
            f"partition covers {partition.size} vertices; hypergraph has {h.vertex_count}")
    labels = partition.labels
    for e in h.c_edges:
        if len({labels[v] for v in e}) == len(e):
            return False
    for e in h.d_edges:
        if len({labels[v] for v in e}) == 1:
            return False
    return True


def strict_class_count(h: MixedHypergraph, partition: Partition) -> int:
    """Class count of a coloring that must be proper; improper input is a hard error."""
    if not is_proper(h, partition):
        raise ImproperColoringError(f"partition {partition} is not a proper coloring")
    return partition.class_count


@dataclass(frozen=True)
class VertexBijection:
    """A bijection between two vertex sets of equal size; ``forward[v]`` is the image of ``v``."""

    forward: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.forward) != list(range(len(self.forward))):
            raise ValueError("forward map is not a bijection onto 0..n-1")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "VertexBijection":
        n = len(mapping)
        if set(mapping) != set(range(n)):
            raise ValueError("mapping domain is not a dense vertex range 0..n-1")
        return cls(tuple(mapping[v] for v in range(n)))

    def __call__(self, v: int) -> int:
        return self.forward[v]

    @property
    def inverse(self) -> "VertexBijection":
        inv = [0] * len(self.forward)
        for v, w in enumerate(self.forward):
            inv[w] = v
        return VertexBijection(tuple(inv))


def check_isomorphism_under_map(h1: MixedHypergraph, h2: MixedHypergraph,
                                bijection: VertexBijection) -> bool:
    """Whether the supplied bijection carries the edge families of h1 exactly onto h2's."""
    if h1.vertex_count != h2.vertex_count:
        raise ValueError("hypergraphs have different vertex counts; no bijection exists")
    if len(bijection.forward) != h1.vertex_count:
        raise ValueError(
            f"bijection spans {len(bijection.forward)} vertices; hypergraphs have "
            f"{h1.vertex_count}")
    f = bijection.forward

    def image(family: tuple[tuple[int, ...], ...]) -> set[tuple[int, ...]]:
        return {tuple(sorted(f[v] for v in e)) for e in family}

    return (image(h1.c_edges) == set(h2.c_edges)
            and image(h1.d_edges) == set(h2.d_edges))
