from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from bihyper.colorings import (ChromaticSpectrum, chromatic_spectrum,
                               enumerate_strict_colorings, feasible_set,
                               is_one_realization, iter_strict_colorings)
from bihyper.construction import canonical_colorings, construct
from bihyper.model import Partition, build_bi_hypergraph, build_hypergraph, is_proper

from conftest import (BELL, brute_force_colorings, random_mixed_hypergraph,
                      stirling_row)


class TestSpectrumType:
    def test_trailing_zeros_trimmed(self):
        s = ChromaticSpectrum((1, 0, 2, 0, 0))
        assert s.counts == (1, 0, 2)
        assert s.upper_chromatic == 3
        assert s.feasible == (1, 3)
        assert s.total == 3
        assert s.r(2) == 0 and s.r(3) == 2 and s.r(9) == 0

    def test_empty(self):
        s = ChromaticSpectrum(())
        assert s.upper_chromatic == 0 and s.total == 0 and s.feasible == ()

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            ChromaticSpectrum((1, -1))


class TestSmallExamples:
    def test_edgeless_three_vertices(self):
        rep = enumerate_strict_colorings(build_hypergraph(3))
        assert len(rep.colorings) == 5  # B(3)
        assert rep.spectrum.counts == (1, 3, 1)

    def test_edgeless_four_vertices(self):
        assert chromatic_spectrum(build_hypergraph(4)).counts == (1, 7, 6, 1)

    def test_single_bi_edge(self):
        h = build_bi_hypergraph(3, [[0, 1, 2]])
        rep = enumerate_strict_colorings(h)
        # oracle: of the 5 partitions of 3 points, exactly the three
        # 2-class splits keep the edge on exactly two classes
        assert rep.colorings == tuple(brute_force_colorings(h))
        assert rep.spectrum.counts == (0, 3)
        assert rep.feasible == (2,)
        assert feasible_set(h) == (2,)

    def test_single_d_edge(self):
        h = build_hypergraph(3, [], [[0, 1, 2]])
        # only the monochromatic partition fails
        assert chromatic_spectrum(h).counts == (0, 3, 1)

    def test_uncolorable_instance(self):
        # C-edge wants a repeat among 3 vertices; the three D-pairs forbid every repeat
        h = build_hypergraph(3, [[0, 1, 2]], [[0, 1], [0, 2], [1, 2]])
        assert brute_force_colorings(h) == []
        rep = enumerate_strict_colorings(h)
        assert rep.colorings == () and rep.feasible == ()
        assert rep.spectrum.counts == ()

    def test_empty_hypergraph(self):
        rep = enumerate_strict_colorings(build_hypergraph(0))
        assert rep.colorings == () and rep.spectrum.counts == ()

    def test_edgeless_rows_match_stirling(self):
        for v in range(1, 8):
            assert chromatic_spectrum(build_hypergraph(v)).counts == stirling_row(v)


class TestConstructedExamples:
    def test_two_count_construction_realizes_both(self):
        rep = enumerate_strict_colorings(construct([4, 2]).hypergraph)
        assert len(rep.colorings) == 2
        assert rep.feasible == (2, 4)
        assert rep.spectrum.counts == (0, 1, 0, 1)

    def test_colorings_are_sorted_and_canonical(self):
        rep = enumerate_strict_colorings(construct([5, 3, 2]).hypergraph)
        encodings = [p.labels for p in rep.colorings]
        assert encodings == sorted(encodings)
        assert all(Partition(p.labels) == p for p in rep.colorings)


class TestOracleEquivalence:
    def test_exact_set_equality_random_instances(self, rng):
        for _ in range(60):
            h = random_mixed_hypergraph(rng, v_min=1, v_max=7)
            rep = enumerate_strict_colorings(h)
            assert list(rep.colorings) == brute_force_colorings(h)
            assert rep.spectrum.total == len(rep.colorings)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_exact_set_equality_generated(self, data):
        v = data.draw(st.integers(1, 5))
        from itertools import combinations
        pool = [e for size in (2, 3) if size <= v for e in combinations(range(v), size)]
        c = data.draw(st.lists(st.sampled_from(pool), max_size=5)) if pool else []
        d = data.draw(st.lists(st.sampled_from(pool), max_size=5)) if pool else []
        h = build_hypergraph(v, c, d)
        assert list(enumerate_strict_colorings(h).colorings) == brute_force_colorings(h)

    def test_restriction_of_strict_coloring_is_proper(self, rng):
        # a strict coloring restricted to an induced subhypergraph stays proper
        from bihyper.model import induced_subhypergraph
        for _ in range(25):
            h = random_mixed_hypergraph(rng, v_min=2, v_max=6)
            subset = [v for v in range(h.vertex_count) if rng.random() < 0.6]
            if not subset:
                continue
            sub, _ = induced_subhypergraph(h, subset)
            for p in iter_strict_colorings(h):
                assert is_proper(sub, p.restrict(subset))


class TestOrderAndDeterminism:
    def test_any_vertex_order_gives_same_colorings(self, rng):
        for _ in range(10):
            h = random_mixed_hypergraph(rng, v_min=2, v_max=6)
            baseline = enumerate_strict_colorings(h).colorings
            for _ in range(10):
                order = list(range(h.vertex_count))
                rng.shuffle(order)
                assert enumerate_strict_colorings(h, order=order).colorings == baseline

    def test_repeated_runs_identical(self):
        h = construct([5, 3, 2]).hypergraph
        a = enumerate_strict_colorings(h)
        b = enumerate_strict_colorings(h)
        assert a == b

    def test_bad_order_rejected(self):
        with pytest.raises(ValueError, match="permutation"):
            enumerate_strict_colorings(build_hypergraph(3), order=[0, 0, 1])

    def test_limit_caps_collection_not_counting(self):
        rep = enumerate_strict_colorings(build_hypergraph(4), limit=3)
        assert len(rep.colorings) == 3
        assert rep.spectrum.total == BELL[4]
        uncapped = enumerate_strict_colorings(build_hypergraph(4))
        assert rep.colorings == uncapped.colorings[:3]

    def test_spectrum_consistency(self, rng):
        for _ in range(20):
            h = random_mixed_hypergraph(rng, v_min=1, v_max=6)
            rep = enumerate_strict_colorings(h)
            assert rep.spectrum.total == len(rep.colorings)
            if rep.colorings:
                assert rep.spectrum.upper_chromatic == max(p.class_count for p in rep.colorings)
            assert rep.feasible == tuple(sorted({p.class_count for p in rep.colorings}))


class TestParallel:
    def test_worker_count_does_not_change_report(self, rng):
        instances = [construct([4, 2]).hypergraph,
                     construct([4, 3, 2]).hypergraph,
                     build_hypergraph(5)]
        instances += [random_mixed_hypergraph(rng, v_min=2, v_max=7) for _ in range(3)]
        for h in instances:
            sequential = enumerate_strict_colorings(h)
            parallel = enumerate_strict_colorings(h, threads=3)
            assert sequential == parallel


class TestOneRealization:
    def test_construction_passes_with_witnesses(self):
        built = construct([4, 2])
        cert = is_one_realization(built.hypergraph, {2, 4})
        assert cert and cert.ok
        assert len(cert.witnesses) == 2
        assert [w.class_count for w in cert.witnesses] == [2, 4]
        assert set(cert.witnesses) == set(canonical_colorings(built))

    def test_repeated_class_count_refutes(self):
        h = build_bi_hypergraph(3, [[0, 1, 2]])
        cert = is_one_realization(h, {2})
        assert not cert
        assert "two distinct strict 2-colorings" in cert.failure
        assert len(cert.counterexamples) == 2
        a, b = cert.counterexamples
        assert a != b and a.class_count == b.class_count == 2

    def test_missing_class_count_refutes(self):
        cert = is_one_realization(construct([4, 2]).hypergraph, {2, 3, 4})
        assert not cert
        assert "k in [3]" in cert.failure

    def test_unexpected_class_count_refutes(self):
        cert = is_one_realization(construct([4, 2]).hypergraph, {4})
        assert not cert
        assert "not in the target set" in cert.failure
        assert cert.counterexamples[0].class_count == 2

    def test_invalid_target(self):
        with pytest.raises(ValueError):
            is_one_realization(build_hypergraph(3), [])
        with pytest.raises(ValueError):
            is_one_realization(build_hypergraph(3), [0, 2])
