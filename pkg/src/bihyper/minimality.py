"""Exhaustive search for one-realizations among small 3-uniform bi-hypergraphs.

Every 3-uniform bi-hypergraph on ``v`` vertices is a subset of the
``C(v,3)`` vertex triples, encoded as a bitmask over the lexicographically
sorted triple list.  The stream can optionally be reduced to one canonical
representative per isomorphism class (the numerically smallest mask over
all vertex relabelings, brute-forced over the ``v!`` permutations, which is
cheap at this scale).  Certification walks the stream and checks each
instance for being a one-realization of the target set, abandoning an
instance as soon as a second coloring at some class count or a coloring
with an out-of-target class count appears.

Runs are budgeted by masks processed and resumable from a ``(v, mask)``
cursor; the stream is chunked by contiguous mask ranges, which is also the
unit handed to worker processes, so reports are identical for any worker
count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator

from .colorings import OneRealizationCertificate, is_one_realization
from .construction import FeasibleSpec
from .model import MixedHypergraph

DEFAULT_BUDGET = 10_000_000
DEFAULT_VERTEX_CAP = 6
_CHUNK = 4096

VERDICT_NONE = "certified-none"
VERDICT_WITNESS = "witness-found"
VERDICT_ABORTED = "aborted-budget"


def _triples(v: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(v), 3))


def _mask_to_hypergraph(v: int, triples: list[tuple[int, int, int]],
                        mask: int) -> MixedHypergraph:
    family = tuple(t for i, t in enumerate(triples) if mask >> i & 1)
    return MixedHypergraph(v, family, family)


def _permutation_actions(v: int) -> list[tuple[int, ...]]:
    """For each vertex permutation, the induced map on triple indices."""
    triples = _triples(v)
    where = {t: i for i, t in enumerate(triples)}
    actions = []
    for perm in permutations(range(v)):
        actions.append(tuple(where[tuple(sorted((perm[a], perm[b], perm[c])))]
                             for a, b, c in triples))
    return actions


def _remap_mask(mask: int, action: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << action[low.bit_length() - 1]
        mask ^= low
    return out


def _canonical_mask(mask: int, actions: list[tuple[int, ...]]) -> int:
    return min(_remap_mask(mask, action) for action in actions)


def enumerate_bi_hypergraphs(v: int, iso_reduce: bool = False,
                             vertex_cap: int = DEFAULT_VERTEX_CAP) -> Iterator[MixedHypergraph]:
    """Yield every 3-uniform bi-hypergraph on ``v`` vertices, by ascending edge mask.

    With ``iso_reduce`` only canonical representatives are yielded, one per
    isomorphism class.  ``v`` beyond ``vertex_cap`` is refused up front,
    naming the instance count the caller would be signing up for.
    """
    if v < 3:
        raise ValueError("need at least 3 vertices to place a 3-uniform edge")
    if v > vertex_cap:
        raise ValueError(
            f"{v} vertices means 2**{comb(v, 3)} = {2 ** comb(v, 3)} instances, over the "
            f"cap of {vertex_cap} vertices; raise vertex_cap if you mean it")
    triples = _triples(v)
    actions = _permutation_actions(v) if iso_reduce else None
    for mask in range(1 << len(triples)):
        if actions is not None and _canonical_mask(mask, actions) != mask:
            continue
        yield _mask_to_hypergraph(v, triples, mask)


@dataclass
class SearchReport:
    """Outcome of a lower-bound certification or witness hunt."""

    spec: FeasibleSpec
    vertex_counts_searched: tuple[int, ...]
    instances_examined: dict[int, int]
    witnesses: list[tuple[MixedHypergraph, OneRealizationCertificate]]
    verdict: str
    masks_processed: int
    cursor: tuple[int, int] | None = None


def _scan_range(payload: tuple) -> tuple[int, list[tuple[int, OneRealizationCertificate]]]:
    """Check masks in [start, stop); returns (examined count, witness masks)."""
    v, start, stop, values, iso_reduce = payload
    triples = _triples(v)
    actions = _permutation_actions(v) if iso_reduce else None
    examined = 0
    witnesses = []
    for mask in range(start, stop):
        if actions is not None and _canonical_mask(mask, actions) != mask:
            continue
        examined += 1
        cert = is_one_realization(_mask_to_hypergraph(v, triples, mask), values)
        if cert.ok:
            witnesses.append((mask, cert))
    return examined, witnesses


def certify_lower_bound(spec: FeasibleSpec | Iterable[int], v_max: int | None = None, *,
                        iso_reduce: bool = False,
                        budget: int = DEFAULT_BUDGET,
                        resume: tuple[int, int] | None = None,
                        threads: int = 1,
                        max_witnesses: int = 1) -> SearchReport:
    """Search every 3-uniform bi-hypergraph on 3..v_max vertices for one-realizations.

    A ``v_max`` below the known optimum certifies the lower bound when the
    verdict is ``certified-none``; running at the optimum instead hunts for
    witnesses.  The budget counts masks processed (including ones skipped
    as non-canonical under ``iso_reduce``); exceeding it aborts with a
    resumable ``(v, mask)`` cursor.  The search stops once ``max_witnesses``
    one-realizations are in hand.
    """
    spec = FeasibleSpec.of(spec)
    if max_witnesses < 1:
        raise ValueError("max_witnesses must be at least 1")
    if v_max is None:
        v_max = 2 * spec.n1 - (spec.n2 + 1) // spec.n1 - 1
    counts = tuple(range(3, v_max + 1))
    examined: dict[int, int] = {v: 0 for v in counts}
    witnesses: list[tuple[MixedHypergraph, OneRealizationCertificate]] = []
    processed = 0
    start_v, start_mask = resume if resume is not None else (counts[0] if counts else 3, 0)

    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        for v in counts:
            if v < start_v:
                continue
            triples = _triples(v)
            total = 1 << len(triples)
            start = start_mask if v == start_v else 0
            allowed_end = min(total, start + max(0, budget - processed))
            bounds = [(a, min(a + _CHUNK, allowed_end))
                      for a in range(start, allowed_end, _CHUNK)]
            payloads = [(v, a, b, spec.values, iso_reduce) for a, b in bounds]
            if pool is None:
                results = map(_scan_range, payloads)
            else:
                futures = [pool.submit(_scan_range, p) for p in payloads]
                results = (f.result() for f in futures)
            for (a, b), (chunk_examined, found) in zip(bounds, results):
                examined[v] += chunk_examined
                processed += b - a
                for witness_mask, cert in found:
                    witnesses.append((_mask_to_hypergraph(v, triples, witness_mask), cert))
                if len(witnesses) >= max_witnesses:
                    if pool is not None:
                        for f in futures:
                            f.cancel()
                    return SearchReport(spec, counts, examined, witnesses[:max_witnesses],
                                        VERDICT_WITNESS, processed)
            if allowed_end < total:
                return SearchReport(spec, counts, examined, witnesses,
                                    VERDICT_ABORTED, processed, cursor=(v, allowed_end))
        verdict = VERDICT_WITNESS if witnesses else VERDICT_NONE
        return SearchReport(spec, counts, examined, witnesses, verdict, processed)
    finally:
        if pool is not None:
            pool.shutdown()
