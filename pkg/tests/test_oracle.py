import random
from fractions import Fraction

import pytest

from treeiso import (
    WeightedTree,
    brute_force_isoperimetry,
    brute_force_min_residue,
    brute_force_outliers,
    isoperimetric_number,
    subpartition_cost,
)
from helpers import p3_tree, path_tree, random_tree


def test_path_of_four():
    value, subs = brute_force_isoperimetry(path_tree(4), 2)
    assert value == Fraction(1, 2)
    assert {frozenset(p) for p in subs[0].parts} == \
        {frozenset({0, 1}), frozenset({2, 3})}


def test_two_vertices_single_edge():
    t = WeightedTree.from_edges(2, [(0, 1, Fraction(5))],
                                [Fraction(2), Fraction(3)], [Fraction(0)] * 2)
    value, subs = brute_force_isoperimetry(t, 2)
    assert value == max(Fraction(5, 2), Fraction(5, 3))
    assert len(subs) == 1


def test_every_achiever_attains_the_value():
    rng = random.Random(83)
    for _ in range(20):
        t = random_tree(rng, rng.randint(3, 8))
        k = rng.randint(2, min(4, t.n))
        alpha = rng.choice([Fraction(0), Fraction(1, 2)])
        value, subs = brute_force_isoperimetry(t, k, alpha)
        assert subs
        for sub in subs:
            assert subpartition_cost(t, sub, alpha) == value
        # canonical ordering: parts listed by smallest member, no duplicates
        families = {tuple(sorted(min(p) for p in s.parts)) for s in subs}
        for fam in families:
            assert list(fam) == sorted(fam)


def test_min_residue_on_path():
    assert brute_force_min_residue(path_tree(4), 2) == 0


def test_min_residue_all_singletons():
    t = path_tree(4)
    value, _ = brute_force_isoperimetry(t, 4)
    assert value == subpartition_cost(t, [{0}, {1}, {2}, {3}])
    assert brute_force_min_residue(t, 4) == 0


def test_value_invariant_under_root():
    rng = random.Random(89)
    for _ in range(10):
        n = rng.randint(3, 8)
        t0 = random_tree(rng, n, root=0)
        edges = [(x, t0.parent[x], t0.parent_flow[x])
                 for x in range(n) if x != t0.root]
        t1 = WeightedTree.from_edges(n, edges, t0.omega, t0.potential,
                                     root=n - 1)
        assert brute_force_isoperimetry(t0, 2)[0] == \
            brute_force_isoperimetry(t1, 2)[0]


def test_matches_solver_on_random_family():
    rng = random.Random(97)
    for _ in range(40):
        t = random_tree(rng, rng.randint(3, 9))
        k = rng.randint(2, min(4, t.n))
        alpha = rng.choice([Fraction(0), Fraction(1, 2), Fraction(1)])
        assert brute_force_isoperimetry(t, k, alpha)[0] == \
            isoperimetric_number(t, k, alpha)[0]


class TestOutliers:
    GRID = [Fraction(i, 10) for i in range(11)]

    def test_zero_potential_is_alpha_independent(self):
        t = path_tree(4)
        assert brute_force_outliers(t, 2, Fraction(0), self.GRID) == frozenset()

    def test_p3_high_alpha_isolates_far_vertex(self):
        assert brute_force_outliers(p3_tree(), 2, Fraction(1, 2), self.GRID) == \
            frozenset({2})

    def test_p3_low_alpha_has_no_outliers(self):
        assert brute_force_outliers(p3_tree(), 2, Fraction(1, 10), self.GRID) == \
            frozenset()


def test_guards():
    rng = random.Random(101)
    with pytest.raises(ValueError):
        brute_force_isoperimetry(random_tree(rng, 14), 2)
    with pytest.raises(ValueError):
        brute_force_min_residue(random_tree(rng, 14), 2)
    with pytest.raises(ValueError):
        brute_force_outliers(random_tree(rng, 9), 2, Fraction(0), [Fraction(0)])
    with pytest.raises(ValueError):
        brute_force_isoperimetry(path_tree(4), 5)
