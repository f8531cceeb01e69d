"""Versioned structured-text interchange format for hypergraphs.

Documents are JSON with a fixed key order, sorted edge lists and vertices
ordered by their full label tuple (flag last), so serialization is
deterministic and ``parse(serialize(x)) == x`` holds byte-for-byte once a
value is normalized.  Labeled constructions embed their label tuples and
enough metadata to rebuild the construction record; plain hypergraphs
carry only indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .construction import FeasibleSpec, LabeledHypergraph, LabeledVertex
from .model import MixedHypergraph, build_hypergraph

FORMAT_VERSION = 1


@dataclass(frozen=True)
class HypergraphDocument:
    """The on-disk shape of a hypergraph, decoupled from in-memory values."""

    format_version: int
    bi: bool
    vertex_count: int
    c_edges: tuple[tuple[int, ...], ...]
    d_edges: tuple[tuple[int, ...], ...]
    s: int | None = None
    labels: tuple[tuple[int, ...], ...] | None = None
    metadata: tuple[tuple[str, str], ...] = ()

    def to_text(self) -> str:
        def inline(rows) -> str:
            return "[" + ", ".join(json.dumps(list(r), separators=(",", ":")) for r in rows) + "]"

        lines = [
            f'  "format_version": {self.format_version},',
            f'  "bi": {json.dumps(self.bi)},',
            f'  "vertex_count": {self.vertex_count},',
        ]
        if self.s is not None:
            lines.append(f'  "s": {self.s},')
        if self.labels is not None:
            lines.append(f'  "labels": {inline(self.labels)},')
        lines.append(f'  "c_edges": {inline(self.c_edges)},')
        lines.append(f'  "d_edges": {inline(self.d_edges)},')
        lines.append(f'  "metadata": {json.dumps(dict(self.metadata))}')
        return "{\n" + "\n".join(lines) + "\n}\n"


def _document_for(value: MixedHypergraph | LabeledHypergraph) -> HypergraphDocument:
    if isinstance(value, LabeledHypergraph):
        h = value.hypergraph
        metadata = [("feasible_set", str(value.spec)), ("variant", value.variant)]
        if value.unproven_regime:
            metadata.append(("unproven_regime", "true"))
        return HypergraphDocument(
            FORMAT_VERSION, h.is_bi(), h.vertex_count, h.c_edges, h.d_edges,
            s=value.spec.s,
            labels=tuple(label.full for label in value.labels),
            metadata=tuple(metadata))
    return HypergraphDocument(
        FORMAT_VERSION, value.is_bi(), value.vertex_count, value.c_edges, value.d_edges)


def serialize(value: MixedHypergraph | LabeledHypergraph) -> str:
    """Render a hypergraph as deterministic structured text."""
    return _document_for(value).to_text()


def _take(doc: dict, key: str, types: tuple, required: bool = True):
    if key not in doc:
        if required:
            raise ValueError(f"{key}: missing required field")
        return None
    value = doc[key]
    if not isinstance(value, types) or (isinstance(value, bool) and bool not in types):
        raise ValueError(f"{key}: expected {' or '.join(t.__name__ for t in types)}, "
                         f"got {type(value).__name__}")
    return value


def _edge_list(doc: dict, key: str) -> list[list[int]]:
    raw = _take(doc, key, (list,))
    for pos, edge in enumerate(raw):
        if not isinstance(edge, list) or not all(isinstance(v, int) for v in edge):
            raise ValueError(f"{key}[{pos}]: an edge must be a list of integers")
    return raw


def parse(text: str) -> MixedHypergraph | LabeledHypergraph:
    """Parse a document back into a normalized value.

    Raises ValueError with a line diagnostic for malformed syntax and a
    field diagnostic for semantic problems (out-of-range indices, duplicate
    labels, a bi claim with mismatched families, ...).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("malformed document: top level must be an object")

    version = _take(doc, "format_version", (int,))
    if version != FORMAT_VERSION:
        raise ValueError(f"format_version: unsupported version {version}")
    bi = _take(doc, "bi", (bool,))
    vertex_count = _take(doc, "vertex_count", (int,))
    if vertex_count < 0:
        raise ValueError("vertex_count: must be nonnegative")

    try:
        h = build_hypergraph(vertex_count, _edge_list(doc, "c_edges"),
                             _edge_list(doc, "d_edges"))
    except ValueError as exc:
        raise ValueError(f"edges: {exc}") from exc
    if bi and not h.is_bi():
        raise ValueError("bi: document claims bi but C- and D-families differ")

    metadata = _take(doc, "metadata", (dict,), required=False) or {}
    raw_labels = _take(doc, "labels", (list,), required=False)
    if raw_labels is None:
        return h

    s = _take(doc, "s", (int,))
    if len(raw_labels) != vertex_count:
        raise ValueError(f"labels: {len(raw_labels)} labels for {vertex_count} vertices")
    labels = []
    for pos, entry in enumerate(raw_labels):
        if (not isinstance(entry, list) or len(entry) != s + 1
                or not all(isinstance(x, int) for x in entry)):
            raise ValueError(f"labels[{pos}]: expected a list of {s + 1} integers")
        try:
            labels.append(LabeledVertex(tuple(entry[:-1]), entry[-1]))
        except ValueError as exc:
            raise ValueError(f"labels[{pos}]: {exc}") from exc
    if len(set(labels)) != len(labels):
        raise ValueError("labels: duplicate labels")

    try:
        spec = FeasibleSpec.from_string(str(metadata["feasible_set"]))
        variant = str(metadata["variant"])
    except KeyError as exc:
        raise ValueError(f"metadata: labeled documents need {exc.args[0]}") from exc
    if variant not in ("I", "II"):
        raise ValueError(f"metadata: unknown variant {variant!r}")
    if spec.s != s:
        raise ValueError(f"s: {s} does not match the {spec.s} counts in metadata")
    for pos, label in enumerate(labels):
        if any(x > bound for x, bound in zip(label.coords, spec.values)):
            raise ValueError(
                f"labels[{pos}]: coordinates {label.coords} exceed the per-position "
                f"bounds {spec.values}")

    # Normalize vertex order to the sorted labels, remapping edges to match.
    rank = sorted(range(vertex_count), key=lambda i: labels[i].full)
    new_of_old = {old: new for new, old in enumerate(rank)}
    if rank != list(range(vertex_count)):
        h = build_hypergraph(
            vertex_count,
            [[new_of_old[v] for v in e] for e in h.c_edges],
            [[new_of_old[v] for v in e] for e in h.d_edges])
        labels = [labels[old] for old in rank]

    return LabeledHypergraph(
        h, tuple(labels), spec, variant,
        unproven_regime=str(metadata.get("unproven_regime", "")).lower() == "true")
