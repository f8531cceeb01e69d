"""Minimum-size 3-uniform bi-hypergraphs hitting a prescribed feasible set.

Given target class counts ``n1 > n2 > ... > ns >= 2``, vertices are
(s+1)-tuples ``(x1, ..., xs, b)`` with ``1 <= xi <= ni`` and a bit ``b``.
The vertex set is assembled from s coordinate blocks plus one extra
vertex; bi-edges are all vertex triples showing exactly two distinct
values in every tuple position, plus one explicit special edge that is
monochromatic in the bit position.  Variant I uses ``2*n1`` vertices and
is always a one-realization; variant II deletes one designated vertex,
reaching ``2*n1 - 1``, and stays a one-realization when ``n2 == n1 - 1``
and there are at least three class counts.

Grouping vertices by their i-th coordinate always yields a strict
ni-coloring (the i-th canonical coloring); at desk scale the enumerator
confirms these are the only strict colorings, i.e. the construction is a
one-realization of the target set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .model import (MixedHypergraph, Partition, VertexBijection,
                    build_bi_hypergraph, induced_subhypergraph, is_proper)

VARIANTS = ("I", "II")


@dataclass(frozen=True)
class FeasibleSpec:
    """Target feasible set as a strictly decreasing tuple ``n1 > ... > ns >= 2``."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) < 2:
            raise ValueError("a feasible-set target needs at least two class counts")
        if any(a <= b for a, b in zip(values, values[1:])):
            raise ValueError(f"class counts must be strictly decreasing, got {values}")
        if values[-1] < 2:
            raise ValueError(
                "class counts below 2 are not realizable: every bi-edge forces at "
                "least two classes, so no bi-hypergraph with edges has a strict 1-coloring")

    @classmethod
    def of(cls, value: "FeasibleSpec | Iterable[int]") -> "FeasibleSpec":
        """Coerce an iterable of distinct integers, in any order, to a spec."""
        if isinstance(value, FeasibleSpec):
            return value
        counts = sorted(value, reverse=True)
        return cls(tuple(counts))

    @classmethod
    def from_string(cls, text: str) -> "FeasibleSpec":
        try:
            counts = [int(part) for part in text.split(",") if part.strip() != ""]
        except ValueError:
            raise ValueError(f"cannot parse feasible set {text!r}; expected e.g. '5,3,2'")
        return cls.of(counts)

    @property
    def s(self) -> int:
        return len(self.values)

    @property
    def n1(self) -> int:
        return self.values[0]

    @property
    def n2(self) -> int:
        return self.values[1]

    def tail(self) -> "FeasibleSpec":
        """The spec with the largest count dropped; needs at least three counts."""
        if self.s < 3:
            raise ValueError("tail needs a spec with at least three class counts")
        return FeasibleSpec(self.values[1:])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class LabeledVertex:
    """Coordinate tuple plus bit flag naming one vertex of the construction."""

    coords: tuple[int, ...]
    flag: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        if self.flag not in (0, 1):
            raise ValueError(f"flag must be 0 or 1, got {self.flag}")
        if any(x < 1 for x in self.coords):
            raise ValueError(f"coordinates must be >= 1, got {self.coords}")

    @property
    def full(self) -> tuple[int, ...]:
        """The complete (s+1)-tuple with the flag last; also the sort key."""
        return self.coords + (self.flag,)

    def drop_first(self) -> "LabeledVertex":
        return LabeledVertex(self.coords[1:], self.flag)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.full) + ")"


@dataclass(frozen=True)
class LabeledHypergraph:
    """A constructed bi-hypergraph together with its vertex labels.

    ``labels[i]`` names vertex ``i``; labels are sorted by their full
    tuple, so indices are deterministic.  ``unproven_regime`` marks a
    variant II build outside its verified regime (``n2 == n1 - 1`` with at
    least three class counts), where one-realization is not established.
    """

    hypergraph: MixedHypergraph
    labels: tuple[LabeledVertex, ...]
    spec: FeasibleSpec
    variant: str
    unproven_regime: bool = False

    @property
    def vertex_count(self) -> int:
        return self.hypergraph.vertex_count

    def label_index(self) -> dict[LabeledVertex, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: LabeledVertex) -> int:
        try:
            return self.label_index()[label]
        except KeyError:
            raise KeyError(f"no vertex labeled {label}") from None


def min_size(spec: FeasibleSpec | Iterable[int]) -> int:
    """Minimum vertex count of a 3-uniform bi-hypergraph one-realization.

    Equals ``2*n1 - 1`` when ``n2 == n1 - 1`` and ``2*n1`` otherwise.
    """
    spec = FeasibleSpec.of(spec)
    return 2 * spec.n1 - (spec.n2 + 1) // spec.n1


def _block_labels(spec: FeasibleSpec) -> list[list[LabeledVertex]]:
    """The s coordinate blocks, in block order 1..s; duplicates across blocks allowed."""
    n = spec.values
    s = spec.s
    blocks: list[list[LabeledVertex]] = []
    for t in range(1, s):
        block = []
        for k in range(n[t - 1] - n[t]):
            head = (n[t] + k,) * t
            block.append(LabeledVertex(head + (1,) * (s - t), 0))
            block.append(LabeledVertex(head + n[t:], 1))
        blocks.append(block)
    last = []
    for j in range(1, n[-1] + 1):
        last.append(LabeledVertex((j,) * s, 0))
        last.append(LabeledVertex((j,) * s, 1))
    blocks.append(last)
    return blocks


def _extra_label(spec: FeasibleSpec) -> LabeledVertex:
    return LabeledVertex(spec.values, 1)


def special_edge_labels(spec: FeasibleSpec) -> tuple[LabeledVertex, LabeledVertex, LabeledVertex]:
    """The one bi-edge added outside the coordinate rule (flag-monochromatic)."""
    spec = FeasibleSpec.of(spec)
    s, ns = spec.s, spec.values[-1]
    return (LabeledVertex((1,) * s, 0),
            LabeledVertex((ns,) * (s - 1) + (1,), 0),
            LabeledVertex((ns,) * s, 0))


def deleted_label(spec: FeasibleSpec) -> LabeledVertex:
    """The vertex variant II removes."""
    spec = FeasibleSpec.of(spec)
    return LabeledVertex((spec.n2,) + (1,) * (spec.s - 1), 0)


def _coordinate_rule_edges(labels: tuple[LabeledVertex, ...]) -> list[tuple[int, int, int]]:
    width = len(labels[0].full)
    fulls = [v.full for v in labels]
    edges = []
    for a, b, c in combinations(range(len(labels)), 3):
        fa, fb, fc = fulls[a], fulls[b], fulls[c]
        if all(len({fa[j], fb[j], fc[j]}) == 2 for j in range(width)):
            edges.append((a, b, c))
    return edges


def _variant_ii_sound(spec: FeasibleSpec) -> bool:
    # With only two class counts the deleted vertex is what pins down the
    # 2-colorings; removing it admits extra ones (exhaustively confirmed:
    # no 5-vertex bi-hypergraph one-realizes {3,2} at all).  Three or more
    # counts keep the full tail structure intact, and the deletion is safe.
    return spec.n2 == spec.n1 - 1 and spec.s >= 3


def construct(spec: FeasibleSpec | Iterable[int], variant: str = "auto",
              drop_special: bool = False) -> LabeledHypergraph:
    """Build the labeled bi-hypergraph realizing ``spec``.

    ``variant="auto"`` picks the smallest construction verified to be a
    one-realization: II when ``n2 == n1 - 1`` and there are at least three
    class counts, I otherwise.  Variant II can be forced for any spec but
    is flagged ``unproven_regime`` outside that region (for two counts it
    demonstrably gains extra 2-colorings).  ``drop_special`` omits the
    explicit flag-monochromatic edge, for probing how much the coordinate
    rule alone pins down.
    """
    spec = FeasibleSpec.of(spec)
    if variant == "auto":
        variant = "II" if _variant_ii_sound(spec) else "I"
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected I, II or auto")

    pool = [_extra_label(spec)]
    for block in _block_labels(spec):
        pool.extend(block)
    tally: dict[LabeledVertex, int] = {}
    for label in pool:
        tally[label] = tally.get(label, 0) + 1
    duplicated = sorted((v for v, c in tally.items() if c > 1), key=lambda v: v.full)
    seam = LabeledVertex((spec.values[-1],) * spec.s, 1)
    if duplicated != [seam] or tally[seam] != 2:
        raise RuntimeError(
            f"blocks overlap in {[str(v) for v in duplicated]}; expected exactly "
            f"{seam} shared by the last two blocks")

    labels = tuple(sorted(tally, key=lambda v: v.full))
    if len(labels) != 2 * spec.n1:
        raise RuntimeError(f"built {len(labels)} vertices, expected {2 * spec.n1}")

    edges = _coordinate_rule_edges(labels)
    if not drop_special:
        index = {label: i for i, label in enumerate(labels)}
        special = tuple(sorted(index[v] for v in special_edge_labels(spec)))
        if special in edges:
            raise RuntimeError("special edge already produced by the coordinate rule")
        edges.append(special)
    hypergraph = build_bi_hypergraph(len(labels), edges)

    if variant == "II":
        keep = [i for i, label in enumerate(labels) if label != deleted_label(spec)]
        if len(keep) != len(labels) - 1:
            raise RuntimeError("variant II expected to delete exactly one vertex")
        hypergraph, _ = induced_subhypergraph(hypergraph, keep)
        labels = tuple(labels[i] for i in keep)

    return LabeledHypergraph(
        hypergraph, labels, spec, variant,
        unproven_regime=(variant == "II" and not _variant_ii_sound(spec)))


def canonical_coloring(built: LabeledHypergraph, i: int) -> Partition:
    """The strict coloring grouping vertices by their i-th coordinate (1-based)."""
    spec = built.spec
    if not (1 <= i <= spec.s):
        raise ValueError(f"coordinate index {i} out of range 1..{spec.s}")
    ni = spec.values[i - 1]
    classes: list[list[int]] = [[] for _ in range(ni)]
    for vertex, label in enumerate(built.labels):
        classes[label.coords[i - 1] - 1].append(vertex)
    partition = Partition.from_classes(classes)
    assert partition.class_count == ni, "a canonical class is unexpectedly empty"
    assert is_proper(built.hypergraph, partition), "canonical coloring is improper"
    return partition


def canonical_colorings(built: LabeledHypergraph) -> tuple[Partition, ...]:
    return tuple(canonical_coloring(built, i) for i in range(1, built.spec.s + 1))


@dataclass(frozen=True)
class ReductionMap:
    """The coordinate-dropping isomorphism witness for a spec with s >= 3.

    ``subset`` lists the parent vertices whose first two coordinates agree;
    ``restricted`` is the parent induced on them, and ``bijection`` maps it
    onto ``target`` (the variant I build for the tail spec) by dropping the
    first coordinate of every label.
    """

    parent: LabeledHypergraph
    subset: tuple[int, ...]
    restricted: MixedHypergraph
    target: LabeledHypergraph
    bijection: VertexBijection


def reduction_bijection(spec: FeasibleSpec | Iterable[int]) -> ReductionMap:
    """Build the subset and bijection relating a spec to its tail construction."""
    spec = FeasibleSpec.of(spec)
    if spec.s < 3:
        raise ValueError(
            "reduction needs at least three class counts; dropping the largest "
            "must leave a valid target")
    parent = construct(spec, "I")

    wanted: set[LabeledVertex] = {LabeledVertex((spec.n2,) + spec.values[1:], 1)}
    blocks = _block_labels(spec)
    for block in blocks[1:]:
        wanted.update(block)
    index = parent.label_index()
    subset = tuple(sorted(index[label] for label in wanted))

    restricted, old_to_new = induced_subhypergraph(parent.hypergraph, subset)
    target = construct(spec.tail(), "I")
    target_index = target.label_index()
    forward = [0] * len(subset)
    for old in subset:
        image = parent.labels[old].drop_first()
        if image not in target_index:
            raise RuntimeError(f"dropped label {image} is not a vertex of the target")
        forward[old_to_new[old]] = target_index[image]
    return ReductionMap(parent, subset, restricted, target, VertexBijection(tuple(forward)))
