from __future__ import annotations

from itertools import combinations

import pytest

from bihyper.colorings import chromatic_spectrum, enumerate_strict_colorings
from bihyper.construction import (FeasibleSpec, LabeledVertex, canonical_coloring,
                                  canonical_colorings, construct, deleted_label,
                                  min_size, reduction_bijection, special_edge_labels)
from bihyper.model import check_isomorphism_under_map, is_proper


def all_specs(n1_max: int, sizes=(2, 3, 4)) -> list[FeasibleSpec]:
    out = []
    for size in sizes:
        for values in combinations(range(n1_max, 1, -1), size):
            out.append(FeasibleSpec(values))
    return out


class TestFeasibleSpec:
    def test_coercion_sorts(self):
        assert FeasibleSpec.of({2, 4}).values == (4, 2)
        assert FeasibleSpec.of([2, 3, 5]).values == (5, 3, 2)
        assert FeasibleSpec.from_string("5,3,2").values == (5, 3, 2)

    def test_needs_two_counts(self):
        with pytest.raises(ValueError, match="two class counts"):
            FeasibleSpec((3,))

    def test_strictly_decreasing(self):
        with pytest.raises(ValueError, match="strictly decreasing"):
            FeasibleSpec((3, 3))
        with pytest.raises(ValueError, match="strictly decreasing"):
            FeasibleSpec.of([4, 4, 2])

    def test_one_coloring_targets_rejected(self):
        with pytest.raises(ValueError, match="strict 1-coloring"):
            FeasibleSpec((3, 1))

    def test_tail(self):
        assert FeasibleSpec((5, 3, 2)).tail() == FeasibleSpec((3, 2))
        with pytest.raises(ValueError):
            FeasibleSpec((4, 2)).tail()


class TestMinSize:
    def test_known_values(self):
        assert min_size([4, 2]) == 8
        assert min_size([3, 2]) == 5
        assert min_size([5, 4, 2]) == 9

    def test_case_split(self):
        for spec in all_specs(8):
            expected = 2 * spec.n1 - (1 if spec.n2 == spec.n1 - 1 else 0)
            assert min_size(spec) == expected

    def test_invalid_specs_rejected(self):
        with pytest.raises(ValueError):
            min_size([3])
        with pytest.raises(ValueError):
            min_size([4, 1])


class TestConstructI:
    def test_labels_for_four_two(self):
        built = construct([4, 2], "I")
        expected = {(1, 1, 0), (1, 1, 1), (2, 2, 0), (2, 2, 1),
                    (2, 1, 0), (3, 1, 0), (3, 2, 1), (4, 2, 1)}
        assert {l.full for l in built.labels} == expected
        assert built.vertex_count == 8
        # labels sorted by full tuple, flag last
        fulls = [l.full for l in built.labels]
        assert fulls == sorted(fulls)

    def test_special_edge(self):
        assert tuple(l.full for l in special_edge_labels([4, 2])) == \
            ((1, 1, 0), (2, 1, 0), (2, 2, 0))
        built = construct([4, 2], "I")
        index = built.label_index()
        special = tuple(sorted(index[l] for l in special_edge_labels([4, 2])))
        assert special in built.hypergraph.c_edges

    def test_drop_special(self):
        full = construct([4, 2], "I")
        dropped = construct([4, 2], "I", drop_special=True)
        assert len(dropped.hypergraph.c_edges) == len(full.hypergraph.c_edges) - 1
        assert set(dropped.hypergraph.c_edges) < set(full.hypergraph.c_edges)

    def test_size_law(self):
        for spec in all_specs(8):
            assert construct(spec, "I").vertex_count == 2 * spec.n1
            assert construct(spec, "II").vertex_count == 2 * spec.n1 - 1

    def test_coordinate_rule_soundness(self):
        for spec in (FeasibleSpec((4, 2)), FeasibleSpec((5, 3, 2)), FeasibleSpec((5, 4, 3, 2))):
            built = construct(spec, "I")
            index = built.label_index()
            special = tuple(sorted(index[l] for l in special_edge_labels(spec)))
            width = spec.s + 1
            for e in built.hypergraph.c_edges:
                fulls = [built.labels[v].full for v in e]
                distinct = [len({f[j] for f in fulls}) for j in range(width)]
                if e == special:
                    assert distinct[-1] == 1
                    assert all(d == 2 for d in distinct[:-1])
                else:
                    assert all(d == 2 for d in distinct)

    def test_is_bi_and_3_uniform(self):
        h = construct([5, 3, 2]).hypergraph
        assert h.is_bi() and h.is_3_uniform()


class TestVariants:
    def test_auto_prefers_verified_variant(self):
        assert construct([4, 2]).variant == "I"
        assert construct([3, 2]).variant == "I"          # two counts: deletion unsound
        assert construct([4, 3, 2]).variant == "II"
        assert construct([6, 5, 3]).variant == "II"
        assert construct([5, 3, 2]).variant == "I"

    def test_variant_ii_deletes_designated_vertex(self):
        built = construct([3, 2], "II")
        assert built.vertex_count == 5
        assert deleted_label([3, 2]).full == (2, 1, 0)
        assert deleted_label([3, 2]) not in built.labels
        assert {l.full for l in built.labels} == \
            {(1, 1, 0), (1, 1, 1), (2, 2, 0), (2, 2, 1), (3, 2, 1)}

    def test_unproven_regime_flags(self):
        assert construct([4, 2], "II").unproven_regime      # n2 != n1-1
        assert construct([3, 2], "II").unproven_regime      # two counts only
        assert not construct([4, 3, 2], "II").unproven_regime
        assert not construct([4, 2], "I").unproven_regime

    def test_two_count_deleted_variant_gains_extra_colorings(self):
        # frozen from an independent sweep of all 1024 bi-hypergraphs on 5
        # vertices: no one-realization of {3,2} exists there at all, and the
        # deleted-vertex build has five strict 2-colorings
        assert chromatic_spectrum(construct([3, 2], "II").hypergraph).counts == (0, 5, 1)
        assert chromatic_spectrum(construct([4, 3], "II").hypergraph).counts == (0, 8, 1, 1)

    def test_unknown_variant(self):
        with pytest.raises(ValueError, match="variant"):
            construct([4, 2], "III")


class TestCanonicalColorings:
    def test_four_two_first_coordinate(self):
        built = construct([4, 2], "I")
        p = canonical_coloring(built, 1)
        by_label = {frozenset(built.labels[v].full for v in cl) for cl in p.classes()}
        assert by_label == {
            frozenset({(1, 1, 0), (1, 1, 1)}),
            frozenset({(2, 2, 0), (2, 2, 1), (2, 1, 0)}),
            frozenset({(3, 1, 0), (3, 2, 1)}),
            frozenset({(4, 2, 1)}),
        }
        assert p.class_count == 4

    def test_four_two_second_coordinate(self):
        built = construct([4, 2], "I")
        assert canonical_coloring(built, 2).class_count == 2

    def test_deleted_variant_coloring(self):
        built = construct([3, 2], "II")
        assert built.vertex_count == 5
        assert canonical_coloring(built, 1).class_count == 3

    def test_always_proper(self):
        for values in ([4, 2], [5, 4], [5, 3, 2], [5, 4, 3, 2]):
            built = construct(values)
            for i in range(1, built.spec.s + 1):
                p = canonical_coloring(built, i)
                assert is_proper(built.hypergraph, p)
                assert p.class_count == built.spec.values[i - 1]

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            canonical_coloring(construct([4, 2]), 3)


class TestOneRealizationDeskScale:
    def test_small_specs_realize_exactly_their_counts(self):
        for spec in all_specs(5, sizes=(2, 3, 4)):
            built = construct(spec)
            rep = enumerate_strict_colorings(built.hypergraph)
            assert rep.feasible == tuple(sorted(spec.values))
            assert all(c <= 1 for c in rep.spectrum.counts)
            assert set(rep.colorings) == set(canonical_colorings(built))

    def test_min_size_matches_auto_except_refuted_regime(self):
        for spec in all_specs(6):
            built = construct(spec)
            if spec.s == 2 and spec.n2 == spec.n1 - 1:
                # the formula's value is exhaustively unattainable here; the
                # verified construction uses one more vertex
                assert built.vertex_count == min_size(spec) + 1
            else:
                assert built.vertex_count == min_size(spec)


class TestReduction:
    def test_subset_is_first_two_coordinates_equal(self):
        r = reduction_bijection([5, 3, 2])
        first_two_equal = {v for v, l in enumerate(r.parent.labels)
                           if l.coords[0] == l.coords[1]}
        assert set(r.subset) == first_two_equal
        assert len(r.subset) == 2 * 3  # twice the second-largest count

    def test_coordinate_drop_is_isomorphism(self):
        for values in ([5, 3, 2], [4, 3, 2], [5, 4, 3, 2], [6, 4, 2]):
            r = reduction_bijection(values)
            assert check_isomorphism_under_map(r.restricted, r.target.hypergraph, r.bijection)

    def test_image_is_tail_construction(self):
        r = reduction_bijection([5, 3, 2])
        assert r.target.spec == FeasibleSpec((3, 2))
        mapped = {r.target.labels[r.bijection(i)].full for i in range(len(r.subset))}
        assert mapped == {l.full for l in r.target.labels}

    def test_two_counts_rejected(self):
        with pytest.raises(ValueError, match="three"):
            reduction_bijection([4, 2])


class TestLabeledVertex:
    def test_validation(self):
        with pytest.raises(ValueError):
            LabeledVertex((1, 2), 2)
        with pytest.raises(ValueError):
            LabeledVertex((0, 1), 0)
        assert str(LabeledVertex((2, 1), 0)) == "(2,1,0)"

    def test_drop_first(self):
        assert LabeledVertex((3, 3, 2), 1).drop_first() == LabeledVertex((3, 2), 1)
