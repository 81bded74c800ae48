"""Affinity-graph construction from raw feature vectors.

Similarity flows come from an exponential kernel over Euclidean distances,
with two selectable exponent forms:

* ``"eq1"``:  exp(-d / (2 * sigma**2))
* ``"eq5"``:  exp(-d / sigma)            (default)

plus an optional conventional ``"gaussian"`` form exp(-d**2 / (2 * sigma**2)).
Vertex weights are the sums of incident flows, and the optional vertex
potential is the mean distance to the rest of the data set. Flows, weights
and potentials are quantized onto the 2**-bits grid as they are produced.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .core import (
    DEFAULT_QUANTUM_BITS,
    AffinityGraph,
    DataSet,
    GraphEdge,
    ScalingSpec,
    quantize,
)

EXPONENT_FORMS = ("eq1", "eq5", "gaussian")


def pairwise_distance(a, b) -> float:
    """Euclidean distance between two equal-dimension vectors."""
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(np.linalg.norm(a - b))


def distance_matrix(data: DataSet) -> np.ndarray:
    diff = data.points[:, None, :] - data.points[None, :, :]
    return np.sqrt((diff * diff).sum(axis=2))


def _flow(dist: float, sigma: float, exponent: str) -> float:
    if exponent == "eq1":
        return math.exp(-dist / (2.0 * sigma * sigma))
    if exponent == "eq5":
        return math.exp(-dist / sigma)
    if exponent == "gaussian":
        return math.exp(-(dist * dist) / (2.0 * sigma * sigma))
    raise ValueError(f"unknown exponent form {exponent!r}")


def global_affinity(data: DataSet, sigma: float, exponent: str = "eq5",
                    bits: int = DEFAULT_QUANTUM_BITS) -> AffinityGraph:
    """Complete affinity graph under one global scale parameter.

    Flow of edge (i, j) is the kernel of their distance; the weight of a
    vertex is the sum of its incident flows (the self term is excluded: the
    graph is simple). Potentials start at zero.
    """
    if data.n < 2:
        raise ValueError("global affinity needs at least 2 points")
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    dmat = distance_matrix(data)
    n = data.n
    edges = []
    omega = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1, n):
            d = float(dmat[i, j])
            flow = quantize(_flow(d, sigma, exponent), bits)
            edges.append(GraphEdge(i, j, flow, d))
            omega[i] += flow
            omega[j] += flow
    return AffinityGraph(
        n=n,
        omega=tuple(omega),
        potential=tuple(Fraction(0) for _ in range(n)),
        edges=tuple(edges),
        scaling=ScalingSpec("global", sigma=sigma),
        exponent=exponent,
    )


def nearest_neighbors(data: DataSet, nu: int) -> list:
    """Indices of the nu nearest neighbours of each point, nearest first.

    Distance ties break toward the lower vertex index, so the result is
    deterministic even for duplicated points.
    """
    if not (1 <= nu < data.n):
        raise ValueError(f"nu must be in [1, n-1], got {nu} with n={data.n}")
    dmat = distance_matrix(data)
    n = data.n
    result = []
    for i in range(n):
        others = [j for j in range(n) if j != i]
        others.sort(key=lambda j: (dmat[i, j], j))
        result.append(others[:nu])
    return result


def local_affinity(data: DataSet, nu: int, sigma: float = None,
                   exponent: str = "eq5", bits: int = DEFAULT_QUANTUM_BITS,
                   per_point_sigma: bool = False) -> AffinityGraph:
    """Symmetric nu-nearest-neighbour affinity graph.

    An edge is kept when either endpoint lists the other among its nu
    nearest. Flows use the same exponential kernel as global_affinity;
    vertex weights are the sums over *retained* edges only.

    With ``per_point_sigma`` the kernel becomes
    exp(-d**2 / (sigma_i * sigma_j)) where sigma_i is the distance from i to
    its nu-th neighbour (self-tuning local scaling); ``sigma`` is ignored.
    """
    neighbors = nearest_neighbors(data, nu)
    if not per_point_sigma and (sigma is None or sigma <= 0):
        raise ValueError("local affinity requires sigma > 0 (or per_point_sigma)")
    dmat = distance_matrix(data)
    n = data.n
    if per_point_sigma:
        local_scale = [max(dmat[i, neighbors[i][-1]], 1e-300) for i in range(n)]
    pairs = sorted({(min(i, j), max(i, j)) for i in range(n) for j in neighbors[i]})
    edges = []
    omega = [Fraction(0)] * n
    for i, j in pairs:
        d = float(dmat[i, j])
        if per_point_sigma:
            raw = math.exp(-(d * d) / (local_scale[i] * local_scale[j]))
        else:
            raw = _flow(d, sigma, exponent)
        flow = quantize(raw, bits)
        edges.append(GraphEdge(i, j, flow, d))
        omega[i] += flow
        omega[j] += flow
    return AffinityGraph(
        n=n,
        omega=tuple(omega),
        potential=tuple(Fraction(0) for _ in range(n)),
        edges=tuple(edges),
        scaling=ScalingSpec("local", sigma=sigma, nu=nu),
        exponent=exponent,
    )


def mean_distance_potential(data: DataSet, bits: int = DEFAULT_QUANTUM_BITS) -> tuple:
    """Per-vertex potential: the mean Euclidean distance to the whole data
    set (the zero self term included in the mean)."""
    dmat = distance_matrix(data)
    means = dmat.sum(axis=1) / data.n
    return tuple(quantize(float(m), bits) for m in means)
