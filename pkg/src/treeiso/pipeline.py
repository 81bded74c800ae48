"""End-to-end clustering and profiling pipelines.

Steps: build the affinity graph from the data, take the minimum spanning
tree of the metric distances, solve the exact minimum-isoperimetry problem
on that tree, then post-process to shrink the residue. The profiling
variant attaches mean-distance potentials and sweeps the potential scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .affinity import global_affinity, local_affinity, mean_distance_potential
from .core import DataSet, ScalingSpec, Subpartition, WeightedTree, as_fraction
from .mst import build_weighted_tree, default_root, minimum_spanning_tree
from .outlier import OutlierProfile, outlier_profile, outlier_set, select_alpha_star
from .postprocess import complete_labels, reduce_residue
from .solver import isoperimetric_number


@dataclass
class ClusterResult:
    labels: tuple  # per-point part index, -1 for residue
    value: Fraction
    subpartition: Subpartition
    tree: WeightedTree
    root: int


def build_tree(data: DataSet, scaling: ScalingSpec, exponent: str = "eq5",
               bits: int = 32, root: Optional[int] = None,
               with_potentials: bool = True):
    """Affinity graph -> MST -> rooted weighted tree."""
    if scaling.mode == "global":
        graph = global_affinity(data, scaling.sigma, exponent=exponent, bits=bits)
    else:
        graph = local_affinity(data, scaling.nu, sigma=scaling.sigma,
                               exponent=exponent, bits=bits)
    if with_potentials:
        graph = graph.with_potentials(mean_distance_potential(data, bits=bits))
    if root is None:
        root = default_root(graph)
    tree = build_weighted_tree(minimum_spanning_tree(graph), graph, root=root)
    return tree, root


def labels_of(sub: Subpartition, n: int, tree: Optional[WeightedTree] = None,
              complete: bool = False):
    if complete:
        return tuple(complete_labels(tree, sub))
    labels = [-1] * n
    for j, part in enumerate(sub.parts):
        for x in part:
            labels[x] = j
    return tuple(labels)


def cluster_dataset(data: DataSet, k: int, scaling: ScalingSpec,
                    exponent: str = "eq5", alpha=0, bits: int = 32,
                    root: Optional[int] = None, postprocess: bool = True,
                    complete: bool = False) -> ClusterResult:
    """The full clustering pipeline on a data set."""
    alpha = as_fraction(alpha)
    tree, root = build_tree(data, scaling, exponent=exponent, bits=bits, root=root)
    value, sub = isoperimetric_number(tree, k, alpha)
    if postprocess:
        sub = reduce_residue(tree, sub, value, alpha)
    return ClusterResult(
        labels=labels_of(sub, data.n, tree, complete),
        value=value,
        subpartition=sub,
        tree=tree,
        root=root,
    )


@dataclass
class ProfileResult:
    profile: OutlierProfile
    alpha_star: Fraction
    outliers: frozenset
    tree: WeightedTree
    root: int

    def to_document(self):
        return self.profile.to_document(outliers=self.outliers)


def profile_dataset(data: DataSet, k: int, scaling: ScalingSpec,
                    exponent: str = "eq5", bits: int = 32,
                    root: Optional[int] = None, sigma_s: float = 0.5,
                    epsilon=Fraction(1, 100), alpha_max=None) -> ProfileResult:
    """Outlier-profile pipeline: mean-distance potentials, then a sweep of
    the potential scale with the full clustering pipeline at each sample."""
    tree, root = build_tree(data, scaling, exponent=exponent, bits=bits,
                            root=root, with_potentials=True)
    profile = outlier_profile(tree, k, alpha_max=alpha_max, epsilon=epsilon,
                              sigma_s=sigma_s)
    _interval, alpha_star = select_alpha_star(profile)
    outliers = outlier_set(tree, k, alpha_star, profile=profile)
    return ProfileResult(profile=profile, alpha_star=alpha_star,
                         outliers=outliers, tree=tree, root=root)
