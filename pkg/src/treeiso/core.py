"""Core domain types and exact-arithmetic primitives.

All solver-facing quantities (vertex weights, edge flows, potentials) are
exact rationals.  Real-valued inputs are snapped once, at graph construction
time, onto a fixed power-of-two grid ``2**-bits``; from then on every
comparison inside the solvers is exact integer arithmetic, never a floating
tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

# Exact rational quantity. Values produced by quantize() have a power-of-two
# denominator; arithmetic on them stays exact.
Quantity = Fraction

DEFAULT_QUANTUM_BITS = 32


def as_fraction(value) -> Fraction:
    """Convert a number to an exact Fraction.

    Floats are read through their decimal repr so that e.g. ``0.1`` means
    1/10 rather than the nearest binary double. Ints, Fractions and numeric
    strings convert exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def quantize(value, bits: int = DEFAULT_QUANTUM_BITS) -> Quantity:
    """Round ``value`` half-up onto the grid of multiples of ``2**-bits``.

    Positive inputs never round to zero: anything > 0 is clamped up to at
    least one quantum, so quantized flows stay strictly positive.
    Quantization is monotone: x <= y implies quantize(x) <= quantize(y).
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    exact = value if isinstance(value, Fraction) else Fraction(value)
    grid = 1 << bits
    num = (exact * grid + Fraction(1, 2)).__floor__()
    if num == 0 and exact > 0:
        num = 1
    return Fraction(num, grid)


class DataSet:
    """Feature vectors in R^d with optional ground-truth labels."""

    def __init__(self, points, labels: Optional[Sequence] = None):
        pts = np.asarray(points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ValueError("points must be a nonempty (n, d) array with d >= 1")
        if labels is not None and len(labels) != pts.shape[0]:
            raise ValueError("labels length must match point count")
        self.points = pts
        self.labels = None if labels is None else tuple(labels)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def __repr__(self):
        return f"DataSet(n={self.n}, d={self.d}, labelled={self.labels is not None})"


@dataclass(frozen=True)
class ScalingSpec:
    """Affinity-graph scaling: a complete graph with one global sigma, or a
    symmetric nu-nearest-neighbour graph."""

    mode: str  # "global" | "local"
    sigma: Optional[float] = None
    nu: Optional[int] = None

    def __post_init__(self):
        if self.mode not in ("global", "local"):
            raise ValueError(f"unknown scaling mode {self.mode!r}")
        if self.mode == "global" and (self.sigma is None or self.sigma <= 0):
            raise ValueError("global scaling requires sigma > 0")
        if self.mode == "local" and (self.nu is None or self.nu < 1):
            raise ValueError("local scaling requires nu >= 1")


@dataclass(frozen=True)
class GraphEdge:
    u: int
    v: int
    flow: Quantity  # similarity, > 0
    distance: float  # metric distance, >= 0 (used only for MST selection)


@dataclass(frozen=True)
class AffinityGraph:
    """Undirected simple graph over data points.

    Vertex weights and potentials are exact quantities; edge flows are exact
    quantities; edge distances are plain reals (they drive MST selection
    only, never solver arithmetic).
    """

    n: int
    omega: tuple  # Quantity per vertex, > 0
    potential: tuple  # Quantity per vertex, >= 0
    edges: tuple  # GraphEdge, with u < v, no duplicates
    scaling: Optional[ScalingSpec] = None
    exponent: str = "eq5"

    def with_potentials(self, potentials: Iterable) -> "AffinityGraph":
        pots = tuple(potentials)
        if len(pots) != self.n:
            raise ValueError("potentials length must equal vertex count")
        return replace(self, potential=pots)

    def incident_flow_sums(self) -> list:
        """Sum of edge flows incident to each vertex (exact)."""
        sums = [Fraction(0)] * self.n
        for e in self.edges:
            sums[e.u] += e.flow
            sums[e.v] += e.flow
        return sums


def validate_graph(graph: AffinityGraph) -> Optional[str]:
    """Check every AffinityGraph invariant; return None if ok, else a
    description of the first violation found."""
    if graph.n < 1:
        return "empty vertex set"
    if len(graph.omega) != graph.n or len(graph.potential) != graph.n:
        return "weight arrays do not match vertex count"
    for x, w in enumerate(graph.omega):
        if w <= 0:
            return f"nonpositive vertex weight at vertex {x}"
    for x, p in enumerate(graph.potential):
        if p < 0:
            return f"negative potential at vertex {x}"
    seen = set()
    for e in graph.edges:
        if e.u == e.v:
            return f"self-loop at vertex {e.u}"
        if not (0 <= e.u < graph.n and 0 <= e.v < graph.n):
            return f"edge endpoint out of range: ({e.u}, {e.v})"
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in seen:
            return f"parallel edge {key}"
        seen.add(key)
        if e.flow <= 0:
            return f"nonpositive flow on edge {key}"
        if e.distance < 0:
            return f"negative distance on edge {key}"
    return None


class WeightedTree:
    """Rooted spanning tree with exact weights and a leaves-first order.

    ``order`` is the reverse of a breadth-first traversal from the root
    (children visited in ascending index), so every child appears before its
    parent and the root comes last.
    """

    def __init__(self, n, parent, parent_flow, omega, potential, root, order,
                 children):
        self.n = n
        self.parent = parent  # tuple[int], -1 for the root
        self.parent_flow = parent_flow  # tuple[Quantity|None], None at root
        self.omega = omega
        self.potential = potential
        self.root = root
        self.order = order
        self.children = children  # tuple[tuple[int, ...]]

    @classmethod
    def from_edges(cls, n, edges, omega, potential, root=0):
        """Build a rooted tree from ``n-1`` undirected edges.

        ``edges`` is an iterable of (u, v, flow). Raises if the edges do not
        form a spanning tree or the root is out of range.
        """
        if not (0 <= root < n):
            raise ValueError(f"root {root} is not a vertex of a {n}-vertex tree")
        omega = tuple(omega)
        potential = tuple(potential)
        if len(omega) != n or len(potential) != n:
            raise ValueError("weight arrays must have one entry per vertex")
        edges = list(edges)
        if len(edges) != n - 1:
            raise ValueError(f"a spanning tree on {n} vertices needs {n - 1} edges, "
                             f"got {len(edges)}")
        adj = [[] for _ in range(n)]
        for u, v, flow in edges:
            adj[u].append((v, flow))
            adj[v].append((u, flow))
        for nbrs in adj:
            nbrs.sort()
        parent = [-1] * n
        parent_flow: list = [None] * n
        bfs = [root]
        seen = [False] * n
        seen[root] = True
        head = 0
        while head < len(bfs):
            x = bfs[head]
            head += 1
            for y, flow in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    parent_flow[y] = flow
                    bfs.append(y)
        if len(bfs) != n:
            raise ValueError("edges do not span the vertex set (disconnected)")
        children = [[] for _ in range(n)]
        for x in range(n):
            if parent[x] >= 0:
                children[parent[x]].append(x)
        return cls(
            n=n,
            parent=tuple(parent),
            parent_flow=tuple(parent_flow),
            omega=omega,
            potential=potential,
            root=root,
            order=tuple(reversed(bfs)),
            children=tuple(tuple(c) for c in children),
        )

    def edge_list(self):
        """Tree edges as (child, parent, flow) triples."""
        return [(x, self.parent[x], self.parent_flow[x])
                for x in range(self.n) if x != self.root]

    def neighbors(self, x: int):
        if self.parent[x] >= 0:
            yield self.parent[x]
        yield from self.children[x]

    def __repr__(self):
        return f"WeightedTree(n={self.n}, root={self.root})"


@dataclass(frozen=True)
class Subpartition:
    """k pairwise-disjoint nonempty vertex sets over a tree, the leftover
    residue, and the exact cost they were evaluated at."""

    parts: tuple  # tuple[frozenset[int], ...]
    residue: frozenset
    part_costs: tuple  # Quantity per part: (boundary flow + alpha*potential) / weight
    cost: Quantity
    alpha: Fraction

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def residue_number(self) -> int:
        return len(self.residue)

    @classmethod
    def from_parts(cls, tree: WeightedTree, parts, alpha=0) -> "Subpartition":
        alpha = as_fraction(alpha)
        parts = tuple(frozenset(p) for p in parts)
        part_costs = tuple(normalized_flows(tree, parts, alpha))
        covered = set()
        for p in parts:
            covered |= p
        residue = frozenset(range(tree.n)) - covered
        return cls(parts=parts, residue=residue, part_costs=part_costs,
                   cost=max(part_costs), alpha=alpha)


def _part_index(tree: WeightedTree, parts) -> list:
    """Map each vertex to its part id, -1 for residue. Validates the parts."""
    idx = [-1] * tree.n
    for j, p in enumerate(parts):
        if not p:
            raise ValueError(f"part {j} is empty")
        for x in p:
            if not (0 <= x < tree.n):
                raise ValueError(f"part {j} contains non-vertex {x}")
            if idx[x] != -1:
                raise ValueError(f"vertex {x} appears in parts {idx[x]} and {j}")
            idx[x] = j
    return idx


def normalized_flows(tree: WeightedTree, parts, alpha=0) -> list:
    """Exact normalized flow (boundary flow + alpha * potential) / weight of
    each part, computed from scratch in one pass over the tree edges."""
    alpha = as_fraction(alpha)
    idx = _part_index(tree, parts)
    k = len(parts)
    boundary = [Fraction(0)] * k
    weight = [Fraction(0)] * k
    pot = [Fraction(0)] * k
    for x in range(tree.n):
        j = idx[x]
        if j >= 0:
            weight[j] += tree.omega[x]
            pot[j] += tree.potential[x]
        u = tree.parent[x]
        if u >= 0 and idx[x] != idx[u]:
            f = tree.parent_flow[x]
            if j >= 0:
                boundary[j] += f
            if idx[u] >= 0:
                boundary[idx[u]] += f
    return [(boundary[j] + alpha * pot[j]) / weight[j] for j in range(k)]


def subpartition_cost(tree: WeightedTree, sub, alpha=0) -> Quantity:
    """Exact cost of a subpartition: the maximum normalized flow over its
    parts, with potentials scaled by ``alpha``.

    ``sub`` may be a Subpartition or a plain iterable of vertex sets.
    Overlapping or empty parts raise ValueError.
    """
    parts = sub.parts if isinstance(sub, Subpartition) else tuple(sub)
    return max(normalized_flows(tree, parts, alpha))
