"""treeiso: exact minimum-isoperimetry clustering of weighted trees.

Builds an affinity graph over a data set, takes its Euclidean minimum
spanning tree, and partitions the tree by exactly minimizing the maximum
normalized flow over k disjoint vertex sets. Vertex potentials, scaled by a
parameter alpha, turn the leftover residue into an outlier profile of the
data set.
"""

from .affinity import (
    global_affinity,
    local_affinity,
    mean_distance_potential,
    nearest_neighbors,
    pairwise_distance,
)
from .core import (
    AffinityGraph,
    DataSet,
    GraphEdge,
    Quantity,
    ScalingSpec,
    Subpartition,
    WeightedTree,
    as_fraction,
    normalized_flows,
    quantize,
    subpartition_cost,
    validate_graph,
)
from .evaluate import misclassification_rate
from .mst import build_weighted_tree, default_root, minimum_spanning_tree
from .oracle import (
    brute_force_isoperimetry,
    brute_force_min_residue,
    brute_force_outliers,
)
from .outlier import (
    OutlierProfile,
    ProfileInterval,
    ProfileSample,
    auto_alpha_max,
    interval_measure,
    outlier_profile,
    outlier_set,
    residue_at,
    select_alpha_star,
)
from .pipeline import (
    ClusterResult,
    ProfileResult,
    build_tree,
    cluster_dataset,
    profile_dataset,
)
from .postprocess import (
    ResidueSubtree,
    absorb_subtree,
    complete_labels,
    reduce_residue,
    residue_subtrees,
)
from .solver import (
    SearchBounds,
    find_subpartition,
    isoperimetric_functional,
    isoperimetric_number,
    search_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AffinityGraph",
    "ClusterResult",
    "DataSet",
    "GraphEdge",
    "OutlierProfile",
    "ProfileInterval",
    "ProfileResult",
    "ProfileSample",
    "Quantity",
    "ResidueSubtree",
    "ScalingSpec",
    "SearchBounds",
    "Subpartition",
    "WeightedTree",
    "absorb_subtree",
    "as_fraction",
    "auto_alpha_max",
    "brute_force_isoperimetry",
    "brute_force_min_residue",
    "brute_force_outliers",
    "build_tree",
    "build_weighted_tree",
    "cluster_dataset",
    "complete_labels",
    "default_root",
    "find_subpartition",
    "global_affinity",
    "interval_measure",
    "isoperimetric_functional",
    "isoperimetric_number",
    "local_affinity",
    "mean_distance_potential",
    "minimum_spanning_tree",
    "misclassification_rate",
    "nearest_neighbors",
    "normalized_flows",
    "outlier_profile",
    "outlier_set",
    "pairwise_distance",
    "profile_dataset",
    "quantize",
    "reduce_residue",
    "residue_at",
    "residue_subtrees",
    "search_bounds",
    "select_alpha_star",
    "subpartition_cost",
    "validate_graph",
]
