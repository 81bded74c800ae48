import random
from fractions import Fraction

import pytest

from treeiso import (
    Subpartition,
    absorb_subtree,
    complete_labels,
    isoperimetric_number,
    reduce_residue,
    residue_subtrees,
    subpartition_cost,
)
from helpers import p3_tree, part_is_connected, path_tree, random_tree, star_tree


class TestResidueSubtrees:
    def test_empty_residue(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1}, {2, 3}])
        assert residue_subtrees(t, sub) == []

    def test_star_center_component(self):
        t = star_tree()
        sub = Subpartition.from_parts(
            t, [{1}, {2}, {3}, {5}, {6}, {7}, {8}, {9}, {10}])
        [st] = residue_subtrees(t, sub)
        assert st.vertices == frozenset({0, 4, 11, 12})
        assert st.start_vertices == frozenset({0})

    def test_path_between_two_parts(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0}, {3}])
        [st] = residue_subtrees(t, sub)
        assert st.vertices == frozenset({1, 2})
        assert st.start_vertices == frozenset({1, 2})
        assert st.break_edges == ((1, 0), (2, 3))

    def test_components_split_by_parts(self):
        t = path_tree(5)
        sub = Subpartition.from_parts(t, [{2}])
        comps = residue_subtrees(t, sub)
        assert [sorted(c.vertices) for c in comps] == [[0, 1], [3, 4]]


class TestAbsorbSubtree:
    def test_blocked_when_enlarged_flow_exceeds_bound(self):
        # P3 at alpha=1/2: minimizer {{a},{b}} with bound 2; pulling c into
        # {b} would cost (1 + 5)/2 = 3 > 2
        t = p3_tree()
        sub = Subpartition.from_parts(t, [{0}, {1}], alpha=Fraction(1, 2))
        [st] = residue_subtrees(t, sub)
        got = absorb_subtree(t, sub, 1, (2, 1), st, Fraction(2), Fraction(1, 2))
        assert got == frozenset()

    def test_absorbs_whole_tail(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1}])
        [st] = residue_subtrees(t, sub)
        got = absorb_subtree(t, sub, 0, (2, 1), st, Fraction(1, 2))
        assert got == frozenset({2, 3})

    def test_star_absorption_rejected(self):
        t = star_tree()
        sub = Subpartition.from_parts(
            t, [{1}, {2}, {3}, {5}, {6}, {7}, {8}, {9}, {10}])
        [st] = residue_subtrees(t, sub)
        got = absorb_subtree(t, sub, 3, (0, 5), st, Fraction(1, 14))
        assert got == frozenset()

    def test_rejects_non_break_edge(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1}])
        [st] = residue_subtrees(t, sub)
        with pytest.raises(ValueError):
            absorb_subtree(t, sub, 0, (3, 0), st, Fraction(1))


class TestReduceResidue:
    def test_empty_residue_is_fixpoint(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1}, {2, 3}])
        out = reduce_residue(t, sub, Fraction(1, 2))
        assert out.parts == sub.parts
        assert out.residue == frozenset()

    def test_pendant_leaf_absorbed(self):
        # part {a,b,c} with leaf d left over: enlarged flow (1-1+0)/4 = 0
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1, 2}])
        out = reduce_residue(t, sub, Fraction(1, 3))
        assert out.parts == (frozenset({0, 1, 2, 3}),)
        assert out.residue_number == 0

    def test_rejects_input_over_bound(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0}, {2}])
        with pytest.raises(ValueError):
            reduce_residue(t, sub, Fraction(1, 10))

    def test_properties_on_random_instances(self):
        rng = random.Random(103)
        shrank = 0
        for _ in range(120):
            t = random_tree(rng, rng.randint(3, 12))
            k = rng.randint(2, min(5, t.n))
            alpha = Fraction(rng.randint(0, 2), rng.randint(1, 2))
            value, sub = isoperimetric_number(t, k, alpha)
            out = reduce_residue(t, sub, value, alpha)
            assert subpartition_cost(t, out, alpha) <= subpartition_cost(t, sub, alpha)
            assert out.residue_number <= sub.residue_number
            if out.residue_number < sub.residue_number:
                shrank += 1
            for part in out.parts:
                assert part_is_connected(t, part)
            again = reduce_residue(t, out, value, alpha)
            assert again.parts == out.parts
            assert again.residue == out.residue
        assert shrank > 0  # the family must actually exercise absorption

    def test_union_bound_on_random_instances(self):
        # two candidate subsets that each push a part over the bound cannot
        # jointly stay within it
        rng = random.Random(107)
        checked = 0
        for _ in range(200):
            t = random_tree(rng, rng.randint(5, 12))
            k = rng.randint(2, 3)
            alpha = Fraction(rng.randint(0, 2), 2)
            value, sub = isoperimetric_number(t, k, alpha)
            subtrees = residue_subtrees(t, sub)
            for j, part in enumerate(sub.parts):
                adjacent = [st for st in subtrees
                            if any(a in part for _s, a in st.break_edges)]
                if len(adjacent) < 2:
                    continue
                s1 = set(adjacent[0].vertices)
                s2 = set(adjacent[1].vertices)
                f1 = subpartition_cost(t, [part | s1], alpha)
                f2 = subpartition_cost(t, [part | s2], alpha)
                if f1 > value and f2 > value:
                    checked += 1
                    assert subpartition_cost(t, [part | s1 | s2], alpha) > value
        assert checked > 0


class TestCompleteLabels:
    def test_identity_on_empty_residue(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0, 1}, {2, 3}])
        assert complete_labels(t, sub) == [0, 0, 1, 1]

    def test_leaf_takes_adjacent_part(self):
        t = path_tree(4)
        sub = Subpartition.from_parts(t, [{0}, {1}, {2}])
        assert complete_labels(t, sub) == [0, 1, 2, 2]

    def test_midpoint_tie_goes_to_lower_part(self):
        t = path_tree(5)
        sub = Subpartition.from_parts(t, [{0}, {4}])
        assert complete_labels(t, sub) == [0, 0, 0, 1, 1]

    def test_needs_a_part(self):
        t = path_tree(3)
        with pytest.raises(ValueError):
            complete_labels(t, Subpartition(parts=(), residue=frozenset({0, 1, 2}),
                                            part_costs=(), cost=Fraction(0),
                                            alpha=Fraction(0)))
