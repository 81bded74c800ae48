from fractions import Fraction

import pytest

from treeiso import (
    DataSet,
    ScalingSpec,
    brute_force_isoperimetry,
    cluster_dataset,
    profile_dataset,
    subpartition_cost,
)


def test_two_clumps_recovered():
    data = DataSet([[0.0], [1.0], [10.0], [11.0]])
    result = cluster_dataset(data, k=2, scaling=ScalingSpec("global", sigma=1.0))
    assert set(result.subpartition.parts) == \
        {frozenset({0, 1}), frozenset({2, 3})}
    assert result.subpartition.residue_number == 0
    assert result.labels[0] == result.labels[1] != result.labels[2] == result.labels[3]


def test_value_matches_oracle_on_tiny_input():
    data = DataSet([[0.0], [0.7], [2.0], [5.0]])
    result = cluster_dataset(data, k=4, scaling=ScalingSpec("global", sigma=1.0),
                             postprocess=False)
    oracle_value, _ = brute_force_isoperimetry(result.tree, 4)
    assert result.value == oracle_value
    assert subpartition_cost(result.tree, result.subpartition) == result.value


def test_alpha_shifts_clustering():
    # the far point is tolerable at alpha=0 but shed at a high scale
    data = DataSet([[0.0], [0.4], [0.8], [9.0]])
    spec = ScalingSpec("global", sigma=1.0)
    at_zero = cluster_dataset(data, k=2, scaling=spec, alpha=0)
    at_high = cluster_dataset(data, k=2, scaling=spec, alpha=Fraction(50))
    assert at_zero.subpartition.residue_number <= at_high.subpartition.residue_number
    assert 3 in {x for part in at_zero.subpartition.parts for x in part} or \
        3 in at_zero.subpartition.residue


def test_local_scaling_pipeline():
    data = DataSet([[0.0], [1.0], [2.0], [10.0], [11.0], [12.0]])
    with pytest.raises(ValueError, match="disconnected"):
        # nu=2 keeps each triple to itself; the failure names the components
        cluster_dataset(data, k=2, scaling=ScalingSpec("local", sigma=1.0, nu=2))
    result = cluster_dataset(data, k=2,
                             scaling=ScalingSpec("local", sigma=1.0, nu=3))
    assert set(result.subpartition.parts) == \
        {frozenset({0, 1, 2}), frozenset({3, 4, 5})}


def test_complete_assigns_every_point():
    data = DataSet([[0.0], [0.4], [4.0], [9.0], [9.4]])
    result = cluster_dataset(data, k=2, scaling=ScalingSpec("global", sigma=0.5),
                             complete=True)
    assert -1 not in result.labels
    assert len(set(result.labels)) == 2


def test_root_override_keeps_value():
    data = DataSet([[0.0], [1.0], [10.0], [11.0]])
    values = set()
    for root in range(4):
        res = cluster_dataset(data, k=2, scaling=ScalingSpec("global", sigma=1.0),
                              root=root)
        values.add(res.value)
        assert res.root == root
    assert len(values) == 1


def test_profile_dataset_document():
    data = DataSet([[0.0], [0.3], [0.6], [7.0]])
    result = profile_dataset(data, k=2, scaling=ScalingSpec("global", sigma=1.0),
                             alpha_max=Fraction(8), epsilon=Fraction(1, 20))
    doc = result.to_document()
    assert doc["alpha_star"] == float(result.alpha_star)
    assert doc["outliers"] == sorted(result.outliers)
    assert doc["intervals"][0]["alpha_low"] == 0.0
    assert doc["intervals"][-1]["alpha_high"] == 8.0
    # the deliberately isolated point is the outlier story at some scale
    assert any(s.residue == frozenset({3}) for s in result.profile.samples)


def test_rejects_k_out_of_range():
    data = DataSet([[0.0], [1.0]])
    with pytest.raises(ValueError):
        cluster_dataset(data, k=3, scaling=ScalingSpec("global", sigma=1.0))
